/*
   Copyright 2026 The cyclicid Authors

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

// cyclicid: command-line front end.
//
//   cyclicid factor --n 15
//   cyclicid dist --n0 15 --g0 x4+x3+1,x4+x3+x2+x+1,x+1 --trunc 9 --f x6+x3+1
//   cyclicid gen --n0 7 --g0 x3+x+1 --s0 2 --p 0.02 --blocks 2000 --seed 1 --out s.txt
//   cyclicid reconstruct --in s.txt --n-min 3 --n-max 10 --p 0.02
//   cyclicid verify --suite all
//
// Exit status: 0 success or detection, 1 usage error, 2 no code detected,
// 3 invariant failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cyclicid/cyclicid.hpp"

namespace {

using namespace cyclicid;
using json = nlohmann::json;

enum Exit { ok = 0, usage = 1, no_code = 2, invariant = 3 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string num(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

std::string caps_text() {
    return "hard caps: block length " + std::to_string(hard_caps.max_block) + ", subspace dimension " +
           std::to_string(hard_caps.max_dim) + ", deg f " + std::to_string(hard_caps.max_deg_f);
}

Guards checked_guards(const Guards& g) {
    if (g.max_block > hard_caps.max_block || g.max_dim > hard_caps.max_dim || g.max_deg_f > hard_caps.max_deg_f)
        throw UsageError("guard above its hard cap (" + caps_text() + ")");
    return g;
}

void emit(const std::string& text, const std::string& out) {
    if (out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out, std::ios::binary);
    if (!f) throw UsageError("cannot write " + out);
    f << text;
}

// ---- factor ----

struct FactorArgs {
    std::size_t n = 0;
};

int run_factor(const FactorArgs& a, bool machine) {
    if (a.n < 1) throw UsageError("--n must be positive");
    const auto fm = factor_xn1(a.n);
    if (machine) {
        json j{{"n", a.n}, {"divisors", fm.divisor_count()}, {"factors", json::array()}};
        for (const auto& [p, e] : fm.entries) j["factors"].push_back({{"poly", to_bits(p)}, {"human", to_human(p)}, {"multiplicity", e}});
        std::cout << j.dump() << "\n";
        return ok;
    }
    std::cout << "X^" << a.n << "+1 = product of " << fm.entries.size() << " distinct irreducibles\n";
    for (const auto& [p, e] : fm.entries) std::cout << to_human(p) << " ×" << e << "  " << to_bits(p) << "\n";
    std::cout << "divisors: " << fm.divisor_count() << "\n";
    return ok;
}

// ---- dist ----

struct DistArgs {
    std::size_t n0 = 0;
    std::string g0, f;
    std::optional<std::size_t> trunc, d1, q, d2, n, s, s0, j;
    std::optional<double> p;
    bool all_residues = false;
    Guards guards;
};

SubspaceSpec dist_spec(const DistArgs& a, const CyclicCode& code) {
    const bool by_trunc = a.trunc.has_value();
    const bool by_parts = a.d1 || a.q || a.d2;
    const bool by_block = a.n.has_value();
    if (by_trunc + by_parts + by_block != 1)
        throw UsageError("give exactly one of --trunc N, --d1/--q/--d2, or --n/--s [--s0 --j]");
    SubspaceSpec sp = Truncation{code, 0};
    if (by_trunc)
        sp = Truncation{code, *a.trunc};
    else if (by_parts)
        sp = BoundarySpan{code, a.d1.value_or(0), a.q.value_or(0), a.d2.value_or(0)};
    else
        sp = to_spec(code, block_decomposition(code.n(), *a.n, a.s.value_or(0), a.s0.value_or(0), a.j.value_or(1)), *a.n);
    validate(sp);
    return sp;
}

int run_dist(const DistArgs& a, bool machine) {
    const CyclicCode code(a.n0, parse_poly_product(a.g0));
    const Poly2 f = parse_poly(a.f);
    const Guards g = checked_guards(a.guards);
    if (a.p) require_probability(*a.p);
    const SubspaceSpec sp = dist_spec(a, code);

    const auto clean = exact_distribution(sp, f, g);
    const auto predicted = predict_class(sp, f);
    const auto shown = a.p ? noisy_distribution(sp, f, *a.p, g) : clean;
    const bool agree = predicted == clean.cls;

    std::ostringstream os;
    for (std::uint64_t r = 0; r < shown.mass.size(); ++r) {
        if (shown.mass[r] <= 0 && !a.all_residues) continue;
        const std::string res = to_bits(Poly2::from_word(r));
        if (machine)
            os << json{{"residue", res}, {"mass", shown.mass[r]}}.dump() << "\n";
        else
            os << res << " " << num(shown.mass[r]) << "\n";
    }
    if (machine) {
        json j{{"spec", describe(sp)},        {"f", to_bits(f)},
               {"class", class_name(shown.cls)}, {"noise_free_class", class_name(clean.cls)},
               {"predicted", class_name(predicted)}, {"agree", agree},
               {"p0", shown.mass[0]},          {"dimension", clean.log2_den}};
        if (a.p) j["p"] = *a.p;
        os << j.dump() << "\n";
    } else {
        os << "class=" << class_name(shown.cls) << "\n";
        if (a.p) os << "noise_free_class=" << class_name(clean.cls) << "\n";
        os << "predicted=" << class_name(predicted) << "\n";
        os << "P[0]=" << num(shown.mass[0]) << " class=" << class_name(shown.cls) << (agree ? " AGREE" : " DISAGREE") << "\n";
    }
    std::cout << os.str();
    return agree ? ok : invariant;
}

// ---- gen ----

struct GenArgs {
    std::size_t n0 = 0, s0 = 0, blocks = 0;
    std::string g0, out;
    double p = 0;
    std::uint64_t seed = 0;
};

int run_gen(const GenArgs& a, bool machine) {
    StreamConfig cfg{CyclicCode(a.n0, parse_poly_product(a.g0)), a.s0, a.p, a.blocks, a.seed};
    validate(cfg);
    const BitSeq bits = generate_stream(cfg);
    write_stream(a.out, bits);
    json meta{{"n0", a.n0},
              {"g0", to_bits(cfg.code.g())},
              {"k0", cfg.code.k()},
              {"s0", a.s0},
              {"p", a.p},
              {"blocks", a.blocks},
              {"seed", a.seed},
              {"length", bits.size()},
              {"head", "last s0 bits of one extra noisy codeword"},
              {"rng", "mt19937_64; messages and noise on separate splitmix64-derived seeds"}};
    std::ofstream m(a.out + ".meta.json", std::ios::binary);
    if (!m) throw UsageError("cannot write " + a.out + ".meta.json");
    m << meta.dump(2) << "\n";
    if (machine)
        std::cout << json{{"out", a.out}, {"length", bits.size()}}.dump() << "\n";
    else
        std::cout << "wrote " << bits.size() << " bits to " << a.out << "\n";
    return ok;
}

// ---- reconstruct ----

struct ReconArgs {
    std::string in, out, method = "zero-syndrome";
    std::size_t n_min = 2, n_max = 16, jobs = 1;
    double p = 0;
};

std::string machine_report(const ReconReport& r) {
    std::string s;
    s += json{{"method", method_name(r.method)}, {"p", r.p}, {"n_min", r.n_min}, {"n_max", r.n_max}, {"N", r.length}}.dump() + "\n";
    for (const auto& t : r.outcomes) {
        json j{{"n", t.n}, {"s", t.s}, {"f", to_bits(t.f)}, {"M", t.M}, {"stat", t.stat}};
        if (r.method == Method::ZeroSyndrome) {
            j["p0"] = t.p0;
            j["bound"] = t.bound;
            j["tau"] = t.tau;
            j["decision"] = t.decision == Decision::H0 ? "H0" : "H1";
            j["kl_lb"] = t.kl_lb;
        }
        s += j.dump() + "\n";
    }
    for (const auto& d : r.diagnostics) s += json{{"diagnostic", d}}.dump() + "\n";
    if (r.winner)
        s += json{{"winner", {{"n", r.winner->n}, {"s", r.winner->s}, {"g", to_bits(r.winner->g)}, {"score", r.winner->score}}}}.dump() + "\n";
    else
        s += json{{"winner", nullptr}}.dump() + "\n";
    return s;
}

int run_reconstruct(const ReconArgs& a, bool machine) {
    const Method m = parse_method(a.method);
    require_probability(a.p);
    const BitSeq bits = read_stream(a.in);
    const auto rep = reconstruct(bits, a.n_min, a.n_max, a.p, m, a.jobs);
    emit(machine ? machine_report(rep) : format_report(rep), a.out);
    if (!a.out.empty() && !machine) {
        if (rep.winner)
            std::cout << "n=" << rep.winner->n << " s=" << rep.winner->s << " g=" << to_bits(rep.winner->g) << "\n";
        else
            std::cout << "no code detected\n";
    }
    return rep.winner ? ok : no_code;
}

// ---- verify ----

struct VerifyArgs {
    std::string suite = "all";
    std::vector<std::size_t> n0s;
    std::size_t jobs = 0;
    std::uint64_t seed = 20260101;
    Guards guards;
};

int run_verify(const VerifyArgs& a, bool machine) {
    verify::Options opt;
    if (!a.n0s.empty()) opt.n0s = a.n0s;
    opt.jobs = a.jobs;
    opt.seed = a.seed;
    opt.guards = checked_guards(a.guards);
    const auto rep = verify::run_suite(a.suite, opt);
    if (machine) {
        for (const auto& t : rep.items())
            std::cout << json{{"invariant", t.name}, {"checked", t.checked}, {"failed", t.failed}, {"skipped", t.skipped},
                              {"exceptions", t.exceptions}, {"failures", t.failures}, {"notes", t.notes}}
                             .dump()
                      << "\n";
    } else {
        std::cout << rep.format();
        std::cout << (rep.ok() ? "all invariants hold\n" : "INVARIANT FAILURES\n");
    }
    return rep.ok() ? ok : invariant;
}

void add_guard_flags(CLI::App* c, Guards& g) {
    c->add_option("--max-block", g.max_block, "block length guard")->capture_default_str();
    c->add_option("--max-dim", g.max_dim, "subspace dimension guard")->capture_default_str();
    c->add_option("--max-deg-f", g.max_deg_f, "deg f guard")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Identify a binary cyclic code from a noisy bitstream via syndrome distributions"};
    app.require_subcommand(1);
    bool machine = false;
    app.add_flag("--machine", machine, "line-delimited JSON output");

    FactorArgs fa;
    auto* factor = app.add_subcommand("factor", "factor X^n+1 over GF(2)");
    factor->add_option("--n", fa.n, "length")->required();

    DistArgs da;
    auto* dist = app.add_subcommand("dist", "syndrome distribution of one block model");
    dist->add_option("--n0", da.n0, "true code length")->required();
    dist->add_option("--g0", da.g0, "true generator as comma-separated factors")->required();
    dist->add_option("--f", da.f, "candidate divisor of X^n+1")->required();
    dist->add_option("--trunc", da.trunc, "truncation to the first N coordinates");
    dist->add_option("--d1", da.d1, "boundary span: suffix length");
    dist->add_option("--q", da.q, "boundary span: full codewords");
    dist->add_option("--d2", da.d2, "boundary span: prefix length");
    dist->add_option("--n", da.n, "block length (with --s, --s0, --j)");
    dist->add_option("--s", da.s, "assumed offset");
    dist->add_option("--s0", da.s0, "true offset");
    dist->add_option("--j", da.j, "block index, from 1");
    dist->add_option("--p", da.p, "crossover probability; dumps the noisy distribution");
    dist->add_flag("--all-residues", da.all_residues, "list zero-mass residues too");
    add_guard_flags(dist, da.guards);

    GenArgs ga;
    auto* gen = app.add_subcommand("gen", "generate a noisy stream");
    gen->add_option("--n0", ga.n0)->required();
    gen->add_option("--g0", ga.g0)->required();
    gen->add_option("--s0", ga.s0)->capture_default_str();
    gen->add_option("--p", ga.p)->capture_default_str();
    gen->add_option("--blocks", ga.blocks, "transmitted codewords")->required();
    gen->add_option("--seed", ga.seed)->capture_default_str();
    gen->add_option("--out", ga.out)->required();

    ReconArgs ra;
    auto* recon = app.add_subcommand("reconstruct", "search (n, s, g) over a stream file");
    recon->add_option("--in", ra.in)->required();
    recon->add_option("--out", ra.out, "report file (default stdout)");
    recon->add_option("--n-min", ra.n_min)->capture_default_str();
    recon->add_option("--n-max", ra.n_max)->capture_default_str();
    recon->add_option("--p", ra.p, "assumed crossover probability")->capture_default_str();
    recon->add_option("--method", ra.method)
        ->check(CLI::IsMember({"zero-syndrome", "factor-entropy", "root-entropy"}))
        ->capture_default_str();
    recon->add_option("--jobs", ra.jobs, "worker threads, 0 = all cores")->capture_default_str();

    VerifyArgs va;
    auto* ver = app.add_subcommand("verify", "run invariant sweeps");
    ver->add_option("--suite", va.suite)->check(CLI::IsMember(verify::suite_names()))->capture_default_str();
    ver->add_option("--n0", va.n0s, "restrict the sweeps to these code lengths");
    ver->add_option("--jobs", va.jobs, "worker threads, 0 = all cores")->capture_default_str();
    ver->add_option("--seed", va.seed)->capture_default_str();
    add_guard_flags(ver, va.guards);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? ok : usage;
    }

    try {
        if (*factor) return run_factor(fa, machine);
        if (*dist) return run_dist(da, machine);
        if (*gen) return run_gen(ga, machine);
        if (*recon) return run_reconstruct(ra, machine);
        if (*ver) return run_verify(va, machine);
    } catch (const ResourceError& e) {
        std::cerr << "error: " << e.what() << " (" << caps_text() << ")\n";
        return usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return usage;
    }
    return usage;
}
