/*
 * Copyright 2026 The pfaffsum authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "pfaffsum/json_io.hpp"
#include "pfaffsum/param_count.hpp"
#include "pfaffsum/suites.hpp"
#include "pfaffsum/terracini.hpp"

namespace {

using namespace pfaffsum;

struct CommonOpts {
    std::uint64_t prime = kDefaultPrime;
    std::uint64_t prime2 = kSecondPrime;
    std::uint64_t seed = 0;
    int jobs = 0;
    std::vector<int> diag;
    std::string a_file;
    std::string out;
};

void add_prime_seed(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--prime", o.prime, "prime modulus (default 2147483647)");
    cmd->add_option("--seed", o.seed, "rng seed");
    cmd->add_option("--jobs", o.jobs,
                    "worker threads for column assembly and reduction; the "
                    "output is independent of this setting");
}

void add_matrix_input(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--diag", o.diag,
                    "degree-matrix diagonal, comma separated")
        ->delimiter(',');
    cmd->add_option("--A", o.a_file,
                    "JSON file with {\"diag\": [...]} or {\"matrix\": [[...]]}");
}

void apply_jobs(const CommonOpts& o) {
#ifdef _OPENMP
    if (o.jobs > 0) omp_set_num_threads(o.jobs);
#else
    (void)o;
#endif
}

DegreeMatrix load_matrix(const CommonOpts& o) {
    if (!o.a_file.empty()) {
        std::ifstream in(o.a_file);
        if (!in)
            throw std::invalid_argument("cannot open degree-matrix file: " + o.a_file);
        nlohmann::json j;
        in >> j;
        return degree_matrix_from_json(j);
    }
    if (!o.diag.empty()) return DegreeMatrix::from_diagonal(o.diag);
    throw std::invalid_argument("a degree matrix is required (--diag or --A)");
}

void enforce_size_cap(const DegreeMatrix& a) {
    if (a.size() > kMaxSkewSize)
        throw std::invalid_argument(
            "matrix size " + std::to_string(a.size()) +
            " exceeds the supported cap of 16 (subset-lattice memoization)");
}

std::ostream& output_stream(const CommonOpts& o, std::ofstream& file) {
    if (o.out.empty()) return std::cout;
    file.open(o.out);
    if (!file)
        throw std::invalid_argument("cannot open output file: " + o.out);
    return file;
}

int print_certs(const suites::CertList& certs) {
    for (const auto& c : certs)
        std::cout << (c.pass ? "[CERTIFIED] " : "[NOT CERTIFIED] ") << c.name
                  << " -- " << c.detail << "\n";
    return suites::all_pass(certs) ? 0 : 1;
}

int run_check_a(const CommonOpts& o) {
    if (!o.a_file.empty()) {
        std::ifstream in(o.a_file);
        if (!in)
            throw std::invalid_argument("cannot open degree-matrix file: " + o.a_file);
        nlohmann::json j;
        in >> j;
        if (j.contains("matrix")) {
            const auto grid = j.at("matrix").get<std::vector<std::vector<int>>>();
            if (auto err = validate(grid)) {
                std::cout << "invalid: " << *err << "\n";
                return 1;
            }
        }
    }
    const DegreeMatrix a = load_matrix(o);
    std::cout << "valid degree matrix, size " << a.size() << "\n";
    const OrderResult ord = order(a);
    std::cout << "ordered diagonal:";
    for (int x : ord.matrix.diagonal()) std::cout << " " << x;
    std::cout << "\npermutation:";
    for (int x : ord.permutation) std::cout << " " << x;
    std::cout << "\n";
    if (a.size() % 2 == 0) {
        std::cout << "pfaffian degree: " << a.pfaffian_degree() << "\n";
        std::cout << "submaximal degrees:";
        for (int i = 0; i < a.size(); ++i)
            for (int j = i + 1; j < a.size(); ++j)
                std::cout << " " << a.submaximal_degree(i, j);
        std::cout << "\n";
    }
    return 0;
}

int run_pfaffian(const CommonOpts& o, int n, int trials) {
    const DegreeMatrix a = load_matrix(o);
    enforce_size_cap(a);
    if (a.size() % 2 != 0)
        throw std::invalid_argument("pfaffian requires an even-size degree matrix");
    const PrimeField field(o.prime);
    SeededRng rng(o.seed);
    const SkewPolyMatrix m = random_skew(a, n, rng, field);
    const HomogeneousPoly pf = pfaffian(m, field);
    std::cout << "Pf = " << render(pf) << "\n";
    const IdentityCheckResult check = pfaffian_identity_check(m, trials, rng, field);
    if (!check.ok) {
        std::cout << "identity check FAILED at point (";
        for (std::size_t i = 0; i < check.counterexample.size(); ++i)
            std::cout << (i ? "," : "") << check.counterexample[i];
        std::cout << ")\n";
        return 1;
    }
    std::cout << "identity check ok (" << trials << " random points)\n";
    return 0;
}

int run_estimate_s(const CommonOpts& o, int n, int s_max) {
    const DegreeMatrix a = load_matrix(o);
    enforce_size_cap(a);
    const PrimeField field(o.prime);
    const EstimateResult result = estimate_s(a, n, o.seed, field, s_max);
    std::ofstream file;
    std::ostream& os = output_stream(o, file);
    for (const auto& w : result.witnesses) os << witness_to_jsonl(w) << "\n";
    if (result.s_found)
        std::cerr << "certified s = " << result.s_found << " over F_"
                  << field.modulus() << " at seed " << o.seed << "\n";
    else
        std::cerr << "not certified through s_max = " << s_max
                  << " at this seed/prime\n";
    return 0;
}

int run_lefschetz(const CommonOpts& o, int n, int d) {
    const DegreeMatrix a = load_matrix(o);
    enforce_size_cap(a);
    const PrimeField field(o.prime);
    SeededRng rng(o.seed);
    const SkewPolyMatrix g = random_skew(a, n, rng, field);
    GeneratorSet gens{n, {}};
    for (auto& sub : submaximal_pfaffians(g, field))
        gens.members.push_back(std::move(sub.poly));
    if (d < 0) d = (a.trace() + 1) / 2 - 1;
    RankWitness w = lefschetz_surjective(gens, d, rng, field);
    w.seed = o.seed;
    w.diag = a.diagonal();
    std::cout << witness_to_jsonl(w) << "\n";
    return w.full ? 0 : 1;
}

int run_param_count(const CommonOpts& o, int n, int k, int entry) {
    ParamCount pc;
    if (k > 0)
        pc = param_count_constant(k, entry, n);
    else
        pc = param_count_matrix(load_matrix(o), n);
    nlohmann::ordered_json j;
    j["version"] = 1;
    j["n"] = pc.n;
    j["size"] = pc.size;
    j["d"] = pc.d;
    j["dim_v_source"] = pc.dim_v_source;
    j["group_correction"] = pc.group_correction;
    j["expected_dim_v"] = pc.expected_dim_v;
    j["dim_rd"] = pc.dim_rd;
    j["ambient_n"] = pc.ambient_n;
    j["corrected"] = pc.corrected;
    j["verdict"] = pc.dominant_expected ? "dominant-expected" : "nondominant-expected";
    j["expected_s"] = pc.expected_s;
    std::cout << j.dump() << "\n";
    if (!pc.corrected)
        std::cerr << "note: no fiber correction applied for non-constant "
                     "degree matrices; the source dimension is an upper bound\n";
    return 0;
}

int run_scan(const CommonOpts& o, int k_lo, int k_hi, int entry) {
    const PrimeField field(o.prime);
    std::ofstream file;
    std::ostream& os = output_stream(o, file);
    os << "version,k,size,entry_degree,d,prime,seed,s_max,certified_s,"
          "theorem_bound,expected_s,rank_profile\n";
    for (int k = k_lo; k <= k_hi; ++k) {
        if (2 * k > kMaxSkewSize) {
            std::cerr << "stopping at k = " << k
                      << ": matrix size exceeds the cap of 16\n";
            break;
        }
        const DegreeMatrix a =
            DegreeMatrix::from_diagonal(std::vector<int>(2 * k, entry));
        const EstimateResult r = estimate_s(a, 4, o.seed, field, k);
        const ParamCount pc = param_count_constant(k, entry, 4);
        std::ostringstream profile;
        for (std::size_t i = 0; i < r.witnesses.size(); ++i)
            profile << (i ? ";" : "") << r.witnesses[i].rank;
        os << 1 << "," << k << "," << 2 * k << "," << entry << ","
           << a.pfaffian_degree() << "," << o.prime << "," << o.seed << ","
           << k << "," << (r.s_found ? std::to_string(r.s_found) : ">" + std::to_string(k))
           << "," << k << "," << pc.expected_s << "," << profile.str() << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact pfaffian representability certificates over prime fields"};
    app.set_config("--config", "", "key=value config file (prime, seed, ...)");
    app.require_subcommand(1);

    CommonOpts o;
    int n = 4;
    int s_max = 4;
    int trials = 50;
    int d = -1;
    int k = 0;
    int entry = 1;
    std::vector<int> k_range{2, 6};
    std::string verify_suite;

    auto* check_a = app.add_subcommand("check-a", "validate and describe a degree matrix");
    add_matrix_input(check_a, o);

    auto* pfaff = app.add_subcommand("pfaffian", "print the pfaffian of a random conforming matrix and run identity checks");
    add_matrix_input(pfaff, o);
    add_prime_seed(pfaff, o);
    pfaff->add_option("--n", n, "number of variables");
    pfaff->add_option("--trials", trials, "random evaluation points");

    auto* est = app.add_subcommand("estimate-s", "certify an upper bound for s(A) by the tangent-space criterion");
    add_matrix_input(est, o);
    add_prime_seed(est, o);
    est->add_option("--n", n, "number of variables");
    est->add_option("--s-max", s_max, "largest s to try");
    est->add_option("--out", o.out, "output file for witness JSON lines");

    auto* verify = app.add_subcommand("verify", "run a theorem-verification suite");
    verify->add_option("suite", verify_suite,
                       "thm-ternary | thm-4x4 | thm-main | prop-step3 | lemma-wl | generic-forms")
        ->required();
    add_prime_seed(verify, o);
    verify->add_option("--prime2", o.prime2, "second prime for agreement checks");

    auto* scan = app.add_subcommand("scan-conjecture", "small-k data table for constant matrices (no acceptance threshold)");
    add_prime_seed(scan, o);
    scan->add_option("--k-range", k_range, "inclusive k range, e.g. 2,6")
        ->delimiter(',')
        ->expected(2);
    scan->add_option("--entry-degree", entry, "constant entry degree");
    scan->add_option("--out", o.out, "output CSV file");

    auto* pcount = app.add_subcommand("param-count", "expected-dimension arithmetic for the pfaffian variety");
    add_matrix_input(pcount, o);
    pcount->add_option("--n", n, "number of variables");
    pcount->add_option("--k", k, "half-size for a constant-entry matrix");
    pcount->add_option("--entry", entry, "constant entry degree");

    auto* lef = app.add_subcommand("lefschetz", "surjectivity of multiplication by a general linear form");
    add_matrix_input(lef, o);
    add_prime_seed(lef, o);
    lef->add_option("--n", n, "number of variables");
    lef->add_option("--d", d, "target degree (default: threshold tr/2 - 1)");

    CLI11_PARSE(app, argc, argv);

    try {
        apply_jobs(o);
        if (*check_a) return run_check_a(o);
        if (*pfaff) return run_pfaffian(o, n, trials);
        if (*est) return run_estimate_s(o, n, s_max);
        if (*scan) return run_scan(o, k_range[0], k_range[1], entry);
        if (*pcount) return run_param_count(o, n, k, entry);
        if (*lef) return run_lefschetz(o, n, d);
        if (*verify) {
            const PrimeField p1(o.prime);
            const PrimeField p2(o.prime2);
            if (verify_suite == "thm-ternary")
                return print_certs(suites::thm_ternary(o.seed, p1, p2));
            if (verify_suite == "thm-4x4")
                return print_certs(suites::thm_4x4(o.seed, p1, p2));
            if (verify_suite == "thm-main")
                return print_certs(suites::thm_main(o.seed, p1, p2));
            if (verify_suite == "prop-step3")
                return print_certs(suites::prop_step3(o.seed, p1, p2));
            if (verify_suite == "lemma-wl")
                return print_certs(suites::lemma_wl(o.seed, p1, p2));
            if (verify_suite == "generic-forms")
                return print_certs(suites::generic_forms(o.seed, p1, p2));
            std::cerr << "unknown verify suite: " << verify_suite << "\n";
            return 2;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
