// Acceptance suite: runs every acceptance criterion against the corpus and
// prints one PASS/FAIL line per criterion. Exit code 0 iff all pass.

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "spslab/io.hpp"
#include "spslab/oracle.hpp"

using namespace spslab;
using Clock = std::chrono::steady_clock;

namespace {

struct Criterion {
    int number;
    std::string title;
    bool pass;
    std::string note;
};

std::vector<Criterion> results;

void record(int number, const std::string& title, bool pass, const std::string& note = "") {
    results.push_back({number, title, pass, note});
    std::printf("[%s] criterion %2d: %s%s%s\n", pass ? "PASS" : "FAIL", number, title.c_str(),
                note.empty() ? "" : " -- ", note.c_str());
    std::fflush(stdout);
}

/// Exhaustive n <= 3 plus 500 seeded random spaces with n <= 6.
std::vector<FiniteClosureSpace> main_corpus() {
    std::vector<FiniteClosureSpace> corpus;
    for (int n = 1; n <= 3; ++n)
        for (auto& sp : enumerate_closure_spaces(n)) corpus.push_back(std::move(sp));
    const std::array<double, 4> densities{0.15, 0.35, 0.55, 0.8};
    for (int i = 0; i < 500; ++i) {
        int n = 3 + i % 4;
        corpus.push_back(random_closure_space(n, densities[i % densities.size()],
                                              0x5EED0000ull + i));
    }
    return corpus;
}

/// 200 seeded random spaces with n <= 8 for the components criterion.
std::vector<FiniteClosureSpace> components_corpus() {
    std::vector<FiniteClosureSpace> corpus;
    for (int n = 1; n <= 3; ++n)
        for (auto& sp : enumerate_closure_spaces(n)) corpus.push_back(std::move(sp));
    const std::array<double, 4> densities{0.1, 0.3, 0.5, 0.75};
    for (int i = 0; i < 200; ++i) {
        int n = 4 + i % 5;
        corpus.push_back(random_closure_space(n, densities[i % densities.size()],
                                              0xC0FFEEull + i));
    }
    return corpus;
}

struct RunResult {
    int code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(SPSLAB_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {-1, ""};
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

int main() {
    std::vector<FiniteClosureSpace> corpus = main_corpus();
    std::printf("corpus: %zu spaces (exhaustive n<=3 plus 500 random n<=6)\n", corpus.size());

    std::vector<StatePropertySystem> sps_corpus;
    sps_corpus.reserve(corpus.size());
    for (const auto& sp : corpus) sps_corpus.push_back(functor_G(sp));

    // 1. Counit exactness.
    {
        auto t0 = Clock::now();
        int failures = 0;
        for (const auto& sp : corpus)
            if (!counit_check(sp)) ++failures;
        double secs = std::chrono::duration<double>(Clock::now() - t0).count();
        record(1, "counit exactness F(G(X,F)) == (X,F)", failures == 0 && secs < 60.0,
               std::to_string(corpus.size()) + " spaces, " + std::to_string(secs) + " s");
    }

    // 2. Unit isomorphism.
    {
        int failures = 0;
        for (const auto& sps : sps_corpus) {
            try {
                IsoWitness w = unit_iso(sps);
                if (!validate_morphism(w.forward).passed() ||
                    !validate_morphism(w.backward).passed() || !witness_composites_identity(w))
                    ++failures;
            } catch (const std::exception&) {
                ++failures;
            }
        }
        record(2, "unit isomorphism S == G(F(S)) with validated witnesses", failures == 0);
    }

    // 3. ssr criterion.
    {
        long long pairs = 0;
        int disagreements = 0;
        for (const auto& sps : sps_corpus) {
            const int nl = sps.lattice().size();
            for (int a = 0; a < nl; ++a)
                for (int b = a; b < nl; ++b) {
                    ++pairs;
                    if (ssr_by_definition(sps, a, b) != ssr_by_cartan(sps, a, b)) ++disagreements;
                }
        }
        record(3, "ssr definition vs Cartan criterion", disagreements == 0,
               std::to_string(pairs) + " pairs");
    }

    // 4. Theorem 2.
    {
        int disagreements = 0;
        for (size_t i = 0; i < corpus.size(); ++i)
            if (is_classical_sps(sps_corpus[i]) != is_topological(corpus[i])) ++disagreements;
        record(4, "theorem 2: classical iff topological", disagreements == 0);
    }

    // 5. Theorem 3, three routes.
    {
        int disagreements = 0;
        for (size_t i = 0; i < corpus.size(); ++i) {
            SetFamily clopens = clopen_sets(corpus[i]);
            const auto& sps = sps_corpus[i];
            for (int a = 0; a < sps.lattice().size(); ++a) {
                bool clopen = clopens.contains(cartan(sps, a));
                if (is_classical_property(sps, a).has_value() != clopen) ++disagreements;
                if (brute_classical(sps, a).has_value() != clopen) ++disagreements;
            }
        }
        record(5, "theorem 3: classical property iff clopen Cartan image", disagreements == 0);
    }

    // 6. Theorem 4.
    {
        int disagreements = 0;
        for (size_t i = 0; i < corpus.size(); ++i)
            if (is_pure_nonclassical(sps_corpus[i]) != is_connected(corpus[i])) ++disagreements;
        record(6, "theorem 4: pure nonclassical iff connected", disagreements == 0);
    }

    // 7. Components against the brute-force oracle, with structure checks.
    {
        auto t0 = Clock::now();
        std::vector<FiniteClosureSpace> comp_corpus = components_corpus();
        int failures = 0;
        for (const auto& sp : comp_corpus) {
            Partition fast = components(sp);
            if (!(fast == brute_components(sp))) ++failures;
            for (const auto& b : fast.blocks) {
                if (!sp.closed().contains(b)) ++failures;
                if (!is_connected(induced_subspace(sp, b))) ++failures;
                for (int y = 0; y < sp.point_count(); ++y) {
                    if (b.test(y)) continue;
                    Bitset bigger = b;
                    bigger.set(y);
                    if (is_connected(induced_subspace(sp, bigger))) ++failures;
                }
            }
        }
        double secs = std::chrono::duration<double>(Clock::now() - t0).count();
        record(7, "components == brute force, closed, connected, maximal",
               failures == 0 && secs < 300.0,
               std::to_string(comp_corpus.size()) + " spaces, " + std::to_string(secs) + " s");
    }

    // 8. Theorem 5.
    {
        int failures = 0;
        for (const auto& sps : sps_corpus) {
            try {
                const auto& lat = sps.lattice();
                auto systems = component_systems(sps);
                for (const auto& c : systems)
                    if (!is_pure_nonclassical(c.sps)) ++failures;
                for (int a = 0; a < lat.size(); ++a) {
                    int acc = lat.bottom();
                    for (const auto& c : systems) {
                        int r = lat.meet(a, c.s_omega);
                        if ((cartan(sps, a) & c.omega) != cartan(sps, r)) ++failures;
                        acc = lat.join(acc, r);
                    }
                    if (acc != a) ++failures;
                }
            } catch (const std::exception&) {
                ++failures;
            }
        }
        record(8, "theorem 5: component systems valid, pure; trace and reconstruction",
               failures == 0);
    }

    // 9. Theorem 6 probe: validated-with-trivial-segments or a concrete
    // counterexample; fixtures E1-E5 must validate; quotient route always
    // totally disconnected.
    {
        int silent_failures = 0, counterexamples = 0, quotient_failures = 0;
        for (size_t i = 0; i < sps_corpus.size(); ++i) {
            const auto& sps = sps_corpus[i];
            TotallyClassicalResult tc = totally_classical_system(sps);
            if (tc.ok()) {
                FiniteClosureSpace f = functor_F(sps);
                for (const auto& b : components(f).blocks) {
                    int s = component_property(sps, b);
                    auto idx = tc.system->lattice().find(sps.lattice().name(s));
                    if (!idx || segment_system(*tc.system, *idx).lattice().size() != 2)
                        ++silent_failures;
                }
            } else if (tc.eta_failure || !tc.lattice_report.passed() ||
                       !tc.sps_report.passed()) {
                ++counterexamples;
                std::printf("  corpus instance %zu: %s\n", i, tc.failure_summary().c_str());
            } else {
                ++silent_failures;
            }
            if (!is_totally_disconnected(functor_F(totally_classical_via_quotient(sps))))
                ++quotient_failures;
        }
        bool fixtures_ok = true;
        const char* fixture_docs[] = {"e1.cls", "e2.cls", "e3.cls", "e4.cls", "e5.cls"};
        for (const char* name : fixture_docs) {
            Instance inst =
                parse_instance(slurp(std::string(SPSLAB_DATA_DIR) + "/golden/" + name));
            TotallyClassicalResult tc =
                totally_classical_system(functor_G(std::get<FiniteClosureSpace>(inst)));
            fixtures_ok = fixtures_ok && tc.ok();
        }
        record(9, "theorem 6 probe: validated systems or concrete counterexamples",
               silent_failures == 0 && quotient_failures == 0 && fixtures_ok,
               std::to_string(counterexamples) + " eta counterexamples logged");
    }

    // 10. Theorem 7.
    {
        int failures = 0;
        for (size_t i = 0; i < corpus.size(); ++i) {
            try {
                StatePropertySystem cp = classical_part(sps_corpus[i]);
                FiniteClosureSpace cp_space = functor_F(cp);
                if (cp_space.closed() != zero_dimensional_core(corpus[i]).closed()) ++failures;
                if (!is_zero_dimensional(cp_space)) ++failures;
                for (const auto& c : clopen_sets(corpus[i]))
                    if (!clopen_sets(cp_space).contains(c)) ++failures;
            } catch (const std::exception&) {
                ++failures;
            }
        }
        record(10, "theorem 7: classical part valid, image is the core, zero-dimensional",
               failures == 0);
    }

    // 11. Reproducibility: frozen enumeration counts and bit-identical seeds.
    {
        bool counts_ok = enumerate_closure_spaces(1).size() == 1 &&
                         enumerate_closure_spaces(2).size() == 4 &&
                         enumerate_closure_spaces(3).size() == 45 &&
                         enumerate_closure_spaces(4).size() == 2271;
        FiniteClosureSpace a = random_closure_space(6, 0.3, 42);
        bool golden_ok =
            serialize_instance(a) ==
            slurp(std::string(SPSLAB_DATA_DIR) + "/golden/random_n6_d0.3_s42.cls");
        bool repeat_ok = a == random_closure_space(6, 0.3, 42);
        record(11, "reproducibility: frozen counts 1/4/45/2271 and seeded golden instance",
               counts_ok && golden_ok && repeat_ok);
    }

    // 12. CLI round-trip identity on golden files plus the exit-code matrix.
    {
        namespace fs = std::filesystem;
        bool round_trip_ok = true;
        int files = 0;
        for (const auto& entry : fs::directory_iterator(std::string(SPSLAB_DATA_DIR) + "/golden")) {
            std::string ext = entry.path().extension().string();
            if (ext != ".cls" && ext != ".sps") continue;
            if (entry.path().filename().string().starts_with("invalid_")) continue;
            ++files;
            std::string text = slurp(entry.path().string());
            Instance inst = parse_instance(text);
            if (serialize_instance(inst) != text) round_trip_ok = false;
        }
        bool codes_ok = true;
        auto expect = [&](const std::string& args, int code) {
            int got = run_cli(args).code;
            if (got != code) {
                std::printf("  exit-code mismatch: '%s' gave %d, expected %d\n", args.c_str(),
                            got, code);
                codes_ok = false;
            }
        };
        std::string g = std::string(SPSLAB_DATA_DIR) + "/golden/";
        expect("validate " + g + "e1.cls", 0);
        expect("validate " + g + "g_e2.sps", 0);
        expect("components " + g + "e2.cls", 0);
        expect("decompose " + g + "e3.cls", 0);
        expect("check-theorems " + g + "e4.cls", 0);
        expect("validate " + g + "invalid_missing_x.cls", 1);
        expect("validate " + g + "invalid_schema.cls", 1);
        expect("validate " + g + "invalid_syntax.cls", 1);
        expect("validate " + g + "invalid_axiom.sps", 1);
        expect("decompose " + g + "eta_counterexample.cls", 1);
        expect("check-theorems " + g + "eta_counterexample.cls", 1);
        expect("validate /no/such/file.cls", 1);
        expect("validate", 2);
        expect("frobnicate", 2);
        expect("enumerate --n notanumber", 2);
        record(12, "CLI round-trip identity and exit-code matrix", round_trip_ok && codes_ok,
               std::to_string(files) + " golden files");
    }

    bool all = true;
    for (const auto& c : results) all = all && c.pass;
    std::printf("%s\n", all ? "ACCEPTANCE: all criteria passed"
                            : "ACCEPTANCE: at least one criterion failed");
    return all ? 0 : 1;
}
