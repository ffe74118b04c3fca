/*
   Copyright 2026 The multisec authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "multisec/census.hpp"
#include "multisec/chart.hpp"
#include "multisec/gallery.hpp"
#include "multisec/hilbert.hpp"
#include "multisec/input.hpp"
#include "multisec/poly_text.hpp"
#include "multisec/report.hpp"
#include "multisec/tangent.hpp"

namespace {

using namespace multisec;

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::int64_t parse_int(const std::string& text, const char* what) {
    try {
        size_t used = 0;
        long long v = std::stoll(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::logic_error&) {
        throw error(std::string(what) + ": \"" + text + "\" is not an integer");
    }
}

std::vector<std::int64_t> parse_primes(const std::string& text) {
    std::vector<std::int64_t> out;
    for (const auto& part : split_list(text)) {
        std::int64_t p = parse_int(part, "--primes");
        PrimeField check(p);  // rejects composites
        for (auto q : out)
            if (q == p) throw error("--primes: repeated prime " + std::to_string(p));
        out.push_back(p);
    }
    return out;
}

std::vector<int> parse_parts(const std::string& text) {
    std::vector<int> parts;
    for (const auto& part : split_list(text)) {
        std::int64_t k = parse_int(part, "--profile");
        if (k < 1) throw error("--profile: parts must be positive");
        parts.push_back(int(k));
    }
    return parts;
}

std::string profile_str(const Profile& prof) {
    std::string out = "(";
    for (size_t i = 0; i < prof.parts.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(prof.parts[i]);
    }
    return out + ")";
}

Rational parse_value(const std::string& text, const Rational&) {
    std::string num = text, den = "1";
    if (auto slash = text.find('/'); slash != std::string::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
    }
    try {
        mpz_class n(num), d(den);
        if (d == 0) throw error("value \"" + text + "\" has a zero denominator");
        mpq_class q(n, d);
        q.canonicalize();
        return Rational(q);
    } catch (const std::invalid_argument&) {
        throw error("\"" + text + "\" is not a rational value");
    }
}

Fp parse_value(const std::string& text, const Fp& one) {
    PrimeField F(one.p);
    return F.make(parse_int(text, "value"));
}

template <class K>
std::vector<K> parse_values(const std::string& text, const K& one) {
    std::vector<K> out;
    for (const auto& part : split_list(text)) out.push_back(parse_value(part, one));
    return out;
}

// The commands work in canonical chart names; input variables map over by
// position, the last one becoming the line coordinate z.
template <class K>
std::vector<MPoly<K>> rename_by_position(const std::vector<MPoly<K>>& gens,
                                         const VarSetPtr& target) {
    std::vector<MPoly<K>> out;
    out.reserve(gens.size());
    for (const auto& g : gens) {
        MPoly<K> h(target);
        for (const auto& [e, c] : g.terms()) h.add_term(e, c);
        out.push_back(std::move(h));
    }
    return out;
}

void write_output(const std::string& out_path, const std::string& text) {
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw error("cannot open output file \"" + out_path + "\"");
    f << text;
    if (!f) throw error("failed writing \"" + out_path + "\"");
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void note_timing(const std::string& what, double sec) {
    std::fprintf(stderr, "timing: %s %.2fs\n", what.c_str(), sec);
}

// ---------------------------------------------------------------- oh-eqs --

struct ChartOpts {
    std::string input_path;
    std::string profile_text;
    std::string points_text;  // smooth-at only
    std::string star_text;    // empty means the standard chart
    std::uint64_t seed = 0;
    std::string out_path;
};

template <class K>
int run_oh_eqs(const ChartInput& ci, const std::vector<MPoly<K>>& user_gens, const K& one,
               const std::string& field_str, const ChartOpts& opt) {
    const Profile prof(parse_parts(opt.profile_text));
    const int N = int(ci.vars->size());

    OHPresentation<K> pres;
    std::string chart_desc;
    if (!opt.star_text.empty()) {
        K b = parse_value(opt.star_text, one);
        auto ch = make_star_chart<K>(N, b, "z");
        auto gens = rename_by_position(user_gens, ch.ambient);
        std::vector<MPoly<K>> pulled;
        for (const auto& g : gens) pulled.push_back(pull_to_chart(g, ch, one));
        pres = oh_equations(pulled, prof, "z", one);
        chart_desc = "star b=" + b.str();
    } else {
        auto ch = make_standard_chart<K>(N, "z");
        auto gens = rename_by_position(user_gens, ch.ambient);
        std::vector<MPoly<K>> pulled;
        for (const auto& g : gens) pulled.push_back(pull_to_chart(g, ch, one));
        pres = oh_equations(pulled, prof, "z", one);
        chart_desc = "standard";
    }

    std::ostringstream os;
    os << "name: " << ci.name << "\n";
    os << "field: " << field_str << "\n";
    os << "chart: " << chart_desc << "\n";
    os << "profile: " << profile_str(prof) << "\n";
    os << "variables:";
    for (int i = 0; i < pres.vars->size(); ++i) os << " " << pres.vars->name(i);
    os << "\n";
    os << "expected dimension: " << pres.expected_dim() << "\n";
    for (size_t i = 0; i < pres.equations.size(); ++i)
        os << pres.labels[i] << ": " << print_poly(pres.equations[i]) << "\n";
    write_output(opt.out_path, os.str());
    return 0;
}

// -------------------------------------------------------------- smooth-at --

Json verdict_json(bool smooth, int rank, int expected_rank, int expected_dim) {
    Json v;
    v["smooth"] = smooth;
    v["rank"] = rank;
    v["expected_rank"] = expected_rank;
    v["expected_dim"] = expected_dim;
    return v;
}

template <class K>
int run_smooth_at(const ChartInput& ci, const std::vector<MPoly<K>>& user_gens, const K& one,
                  const std::string& field_str, const ChartOpts& opt) {
    const Profile prof(parse_parts(opt.profile_text));
    const std::vector<K> points = parse_values(opt.points_text, one);
    if (int(points.size()) != prof.r())
        throw error("smooth-at: " + std::to_string(prof.r()) + " marked points expected, " +
                    std::to_string(points.size()) + " given");
    std::optional<K> star_b;
    if (!opt.star_text.empty()) star_b = parse_value(opt.star_text, one);

    const int N = int(ci.vars->size());
    auto ch = make_standard_chart<K>(N, "z");
    auto gens = rename_by_position(user_gens, ch.ambient);
    std::vector<MPoly<K>> pulled;
    for (const auto& g : gens) pulled.push_back(pull_to_chart(g, ch, one));
    auto pres = oh_equations(pulled, prof, "z", one);

    // Independent cross-check first: it also validates that the configuration
    // lies on the scheme, naming the violated equation otherwise.
    OracleVerdict oracle;
    if (star_b) {
        auto spres = specialize_to_star(pres, *star_b, one);
        std::vector<K> pt(size_t(spres.chart_dim), zero_like(one));
        for (const auto& a : points) pt.push_back(a);
        oracle = jacobian_oracle(spres, pt);
    } else {
        std::vector<K> pt(size_t(pres.chart_dim), zero_like(one));
        for (const auto& a : points) pt.push_back(a);
        oracle = jacobian_oracle(pres, pt);
    }

    Rng rng(opt.seed);
    auto ns = normalize_generators(gens, points, rng);
    SmoothnessVerdict verdict;
    CotangentRows<K> rows;
    if (star_b) {
        verdict = smooth_fiber_at(ns, prof, points, *star_b);
        rows = fiber_rows(ns, prof, points, *star_b);
    } else {
        verdict = smooth_at(ns, prof, points);
        rows = grassmann_rows(ns, prof, points);
    }

    Json rep;
    rep["command"] = "smooth-at";
    rep["name"] = ci.name;
    rep["field"] = field_str;
    rep["chart"] = star_b ? "star" : "standard";
    if (star_b) rep["b"] = star_b->str();
    rep["profile"] = profile_str(prof);
    Json pl = Json::array();
    for (const auto& a : points) pl.push_back(a.str());
    rep["points"] = pl;
    rep["seed"] = opt.seed;

    rep["oracle"] = verdict_json(oracle.smooth, oracle.rank, oracle.expected_rank,
                                 oracle.expected_dim);
    rep["verdict"] = verdict_json(verdict.smooth, verdict.rank, verdict.expected_rank,
                                  verdict.expected_dim);
    rep["agree"] = oracle.smooth == verdict.smooth;

    Json rj = Json::array();
    for (const auto& row : rows.rows) {
        Json r = Json::array();
        for (const auto& v : row) r.push_back(v.str());
        rj.push_back(r);
    }
    Json ij = Json::array();
    for (const auto& ri : rows.index)
        ij.push_back("g" + std::to_string(ri.t) + ".a" + std::to_string(ri.j) + ".s" +
                     std::to_string(ri.s));
    Json cot;
    cot["rows"] = rj;
    cot["index"] = ij;
    cot["orders"] = rows.flags.e;
    cot["leading_conditions"] = rows.flags.h;
    cot["expected_rank"] = rows.expected_rank;
    rep["cotangent"] = cot;
    rep["normalization_attempts"] = ns.attempts;

    write_output(opt.out_path, render_report(rep));
    return 0;
}

int run_chart_command(bool eqs, const ChartOpts& opt) {
    InputDoc doc = load_input_document(opt.input_path);
    ChartInput ci = chart_from_input(doc);
    if (ci.p == 0) {
        const Rational one(1);
        return eqs ? run_oh_eqs<Rational>(ci, ci.gens_q, one, "Q", opt)
                   : run_smooth_at<Rational>(ci, ci.gens_q, one, "Q", opt);
    }
    PrimeField F(ci.p);
    const std::string fs = "F_" + std::to_string(ci.p);
    return eqs ? run_oh_eqs<Fp>(ci, ci.gens_p, F.make(1), fs, opt)
               : run_smooth_at<Fp>(ci, ci.gens_p, F.make(1), fs, opt);
}

// ----------------------------------------------------------------- census --

struct SourceOpts {
    std::string builtin_name;
    std::string input_path;
};

struct Source {
    std::string name;
    std::string desc;  // "builtin:..." or "file:..."
    std::optional<ImplicitVariety> implicit;
    std::optional<ParametricVariety> parametric;
    bool steiner = false;  // projected Veronese: bespoke genericity test
};

Source resolve_source(const SourceOpts& so, bool prefer_implicit) {
    Source out;
    if (!so.builtin_name.empty()) {
        Builtin b = builtin(so.builtin_name);
        out.name = b.name;
        out.desc = "builtin:" + b.name;
        out.implicit = b.implicit;
        out.parametric = b.parametric;
        out.steiner = b.name == "projected-veronese-p4";
    } else {
        InputDoc doc = load_input_document(so.input_path);
        out.name = doc.name;
        out.desc = "file:" + so.input_path;
        if (!doc.generators.empty())
            out.implicit = implicit_from_input(doc);
        else
            out.parametric = parametric_from_input(doc);
    }
    if (prefer_implicit && !out.implicit && !out.parametric)
        throw error("source \"" + out.name + "\" has no usable presentation");
    return out;
}

struct CensusOpts {
    SourceOpts source;
    std::string primes_text = "7,11,13";
    std::string profile_text;  // optional filter
    std::uint64_t seed = 0;
    int threads = 1;
    std::int64_t budget = 50'000'000;
    std::string out_path;
};

std::int64_t lines_through_point(std::int64_t p, int N) {
    std::int64_t n = 0, pw = 1;
    for (int i = 0; i < N; ++i) {
        n += pw;
        if (pw > (std::int64_t(1) << 56) / p) throw error("census: prime too large");
        pw *= p;
    }
    return n;  // (p^N - 1)/(p - 1)
}

int run_census(const CensusOpts& opt) {
    Source src = resolve_source(opt.source, false);
    const auto primes = parse_primes(opt.primes_text);
    std::optional<GeometricProfile> filter;
    if (!opt.profile_text.empty()) {
        GeometricProfile gp;
        gp.mults = parse_parts(opt.profile_text);
        std::sort(gp.mults.begin(), gp.mults.end(), std::greater<int>());
        filter = gp;
    }
    if (opt.threads < 1 || opt.threads > 64) throw error("--threads: expected 1..64");

    const bool parametric = !src.implicit.has_value();
    if (parametric && !src.parametric)
        throw error("census: source \"" + src.name + "\" has no presentation");

    Rng root(opt.seed);
    Json per_prime = Json::array();
    std::vector<std::pair<std::int64_t, CensusCounts>> all;
    std::set<std::string> keys;

    for (auto p : primes) {
        auto t0 = std::chrono::steady_clock::now();
        std::vector<BetaDraw> draws;
        CensusCounts counts;
        std::vector<Fp> beta;
        Rng prng = root.fork("census").fork(std::uint64_t(p));

        if (!parametric) {
            FpVariety Xp = reduce_mod(*src.implicit, p);
            if (lines_through_point(p, Xp.N) > opt.budget / (p + 1))
                throw error("census: instance too large for the budget");
            ProjectiveSpace ps(p, Xp.N);
            auto off = [&](const std::vector<Fp>& pt) -> std::string {
                return on_variety(Xp, pt) ? "on the variety" : "";
            };
            for (int attempt = 0;; ++attempt) {
                beta = draw_point(ps, prng, off, draws);
                counts = census_through_point(Xp, beta, opt.threads);
                if (counts.contained == 0) break;
                if (attempt == 9)
                    throw error("census: all candidate points lie on contained lines");
                draws.back().accepted = false;
                draws.back().reason = "a line through the point lies inside the variety";
            }
        } else {
            FpParametric fp = reduce_mod(*src.parametric, p);
            std::int64_t per_line = 1;
            for (int i = 0; i < fp.m; ++i) per_line *= p;
            if (lines_through_point(p, fp.N) > opt.budget / (per_line + 1))
                throw error("census: instance too large for the budget");
            ProjectiveSpace ps(p, fp.N);
            if (src.steiner) {
                beta = draw_steiner_point(fp, prng, draws);
                counts = parametric_census(fp, beta, opt.threads);
            } else {
                for (int attempt = 0;; ++attempt) {
                    beta = draw_off_image(fp, ps, prng, draws);
                    counts = parametric_census(fp, beta, opt.threads);
                    if (counts.contained == 0) break;
                    if (attempt == 9)
                        throw error("census: all candidate points lie on contained lines");
                    draws.back().accepted = false;
                    draws.back().reason = "a line through the point lies inside the image";
                }
            }
        }
        note_timing("census p=" + std::to_string(p), seconds_since(t0));

        Json entry;
        entry["p"] = p;
        entry["beta"] = point_str(beta);
        entry["draws"] = draws_json(draws);
        entry["counts"] = census_json(counts);
        per_prime.push_back(entry);
        for (const auto& [k, v] : counts.by_profile) {
            (void)v;
            keys.insert(k);
        }
        all.emplace_back(p, std::move(counts));
    }

    std::set<std::string> want = keys;
    if (filter) want = {filter->str()};
    Json est = Json::object();
    bool flagged = false;
    for (const auto& key : want) {
        std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
        for (const auto& [p, counts] : all) {
            auto it = counts.by_profile.find(key);
            pairs.emplace_back(p, it == counts.by_profile.end() ? 0 : it->second);
        }
        DimensionEstimate e = dimension_estimate(pairs);
        est[key] = estimate_json(e);
        flagged = flagged || e.flagged;
    }

    Json rep;
    rep["command"] = "census";
    rep["name"] = src.name;
    rep["source"] = src.desc;
    rep["route"] = parametric ? "parametric" : "implicit";
    Json cfg;
    cfg["budget"] = opt.budget;
    cfg["primes"] = primes;
    cfg["profile"] = filter ? Json(filter->str()) : Json();
    cfg["seed"] = opt.seed;
    cfg["threads"] = opt.threads;
    cfg["out"] = opt.out_path.empty() ? "-" : opt.out_path;
    rep["config"] = cfg;
    rep["per_prime"] = per_prime;
    rep["estimates"] = est;

    write_output(opt.out_path, render_report(rep));
    return flagged ? 1 : 0;
}

// ----------------------------------------------------------- secant-cover --

struct CoverOpts {
    SourceOpts source;
    std::string primes_text = "7,11";
    int k = 2;
    std::int64_t budget = 50'000'000;
    std::string out_path;
};

int run_secant_cover(const CoverOpts& opt) {
    Source src = resolve_source(opt.source, true);
    if (!src.implicit)
        throw error("secant-cover: source \"" + src.name +
                    "\" has no implicit presentation (homogeneous generators are required)");
    if (opt.k < 2) throw error("secant-cover: k must be at least 2");
    const auto primes = parse_primes(opt.primes_text);

    Json per_prime = Json::array();
    std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
    for (auto p : primes) {
        auto t0 = std::chrono::steady_clock::now();
        FpVariety Xp = reduce_mod(*src.implicit, p);
        CoverCount cc = secant_cover_count(Xp, opt.k, opt.budget);
        note_timing("secant-cover p=" + std::to_string(p), seconds_since(t0));
        Json entry;
        entry["p"] = p;
        entry["cover"] = cover_json(cc);
        per_prime.push_back(entry);
        pairs.emplace_back(p, cc.marked);
    }
    DimensionEstimate e = dimension_estimate(pairs);

    Json rep;
    rep["command"] = "secant-cover";
    rep["name"] = src.name;
    rep["source"] = src.desc;
    Json cfg;
    cfg["budget"] = opt.budget;
    cfg["k"] = opt.k;
    cfg["primes"] = primes;
    cfg["out"] = opt.out_path.empty() ? "-" : opt.out_path;
    rep["config"] = cfg;
    rep["per_prime"] = per_prime;
    rep["estimate"] = estimate_json(e);

    write_output(opt.out_path, render_report(rep));
    return e.flagged ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"multisec: exact computations with multisecant lines of projective varieties"};
    app.require_subcommand(1);

    ChartOpts chart_opt;
    auto add_chart_flags = [&](CLI::App* cmd, bool with_points) {
        cmd->add_option("--input", chart_opt.input_path,
                        "JSON chart description: affine generators, last variable on the line")
            ->required();
        cmd->add_option("--profile", chart_opt.profile_text,
                        "alignment multiplicities k1,k2,...")
            ->required();
        if (with_points)
            cmd->add_option("--points", chart_opt.points_text,
                            "marked line coordinates a1,a2,... (one per profile part)")
                ->required();
        cmd->add_option("--star", chart_opt.star_text,
                        "star chart through the point with line coordinate b");
        if (with_points)
            cmd->add_option("--seed", chart_opt.seed, "seed for the normalization retries");
        cmd->add_option("--out", chart_opt.out_path, "output path (default stdout)");
    };
    CLI::App* oh = app.add_subcommand(
        "oh-eqs", "print defining equations of the aligned Hilbert scheme of line sections");
    add_chart_flags(oh, false);
    CLI::App* sm = app.add_subcommand(
        "smooth-at", "test smoothness of expected dimension at a marked-line configuration");
    add_chart_flags(sm, true);

    CensusOpts census_opt;
    CLI::App* ce = app.add_subcommand(
        "census", "classify all lines through a general point over small prime fields");
    {
        auto* b = ce->add_option("--builtin", census_opt.source.builtin_name,
                                 "built-in variety name (see: gallery list)");
        auto* f = ce->add_option("--input", census_opt.source.input_path,
                                 "JSON variety description");
        b->excludes(f);
        f->excludes(b);
        ce->add_option("--primes", census_opt.primes_text, "comma-separated primes")
            ->capture_default_str();
        ce->add_option("--profile", census_opt.profile_text,
                       "restrict dimension estimates to one profile");
        ce->add_option("--seed", census_opt.seed, "seed for the base point draws")
            ->capture_default_str();
        ce->add_option("--threads", census_opt.threads, "census worker threads")
            ->capture_default_str();
        ce->add_option("--budget", census_opt.budget, "line classification budget")
            ->capture_default_str();
        ce->add_option("--out", census_opt.out_path, "output path (default stdout)");
    }

    CoverOpts cover_opt;
    CLI::App* sc = app.add_subcommand(
        "secant-cover", "estimate the dimension of the union of k-secant lines");
    {
        auto* b = sc->add_option("--builtin", cover_opt.source.builtin_name,
                                 "built-in variety name (see: gallery list)");
        auto* f = sc->add_option("--input", cover_opt.source.input_path,
                                 "JSON variety description");
        b->excludes(f);
        f->excludes(b);
        sc->add_option("--primes", cover_opt.primes_text, "comma-separated primes")
            ->capture_default_str();
        sc->add_option("-k,--k", cover_opt.k, "minimal total intersection degree")
            ->capture_default_str();
        sc->add_option("--budget", cover_opt.budget, "point marking budget")
            ->capture_default_str();
        sc->add_option("--out", cover_opt.out_path, "output path (default stdout)");
    }

    CLI::App* ga = app.add_subcommand("gallery", "built-in variety catalog");
    CLI::App* gl = ga->add_subcommand("list", "list built-in varieties");
    ga->require_subcommand(1);

    CLI11_PARSE(app, argc, argv);

    try {
        if (oh->parsed()) return run_chart_command(true, chart_opt);
        if (sm->parsed()) return run_chart_command(false, chart_opt);
        if (ce->parsed()) {
            if (census_opt.source.builtin_name.empty() && census_opt.source.input_path.empty())
                throw error("census: one of --builtin / --input is required");
            return run_census(census_opt);
        }
        if (sc->parsed()) {
            if (cover_opt.source.builtin_name.empty() && cover_opt.source.input_path.empty())
                throw error("secant-cover: one of --builtin / --input is required");
            return run_secant_cover(cover_opt);
        }
        if (gl->parsed()) {
            std::ostringstream os;
            for (const auto& [name, summary] : builtin_catalog())
                os << name << ": " << summary << "\n";
            std::cout << os.str();
            return 0;
        }
    } catch (const error& e) {
        std::cerr << "multisec: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "multisec: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
