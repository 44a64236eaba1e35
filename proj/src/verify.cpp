#include <hyperlab/verify.hpp>

#include <hyperlab/colouring.hpp>
#include <hyperlab/combinations.hpp>
#include <hyperlab/constructors.hpp>
#include <hyperlab/error.hpp>
#include <hyperlab/generators.hpp>
#include <hyperlab/partition.hpp>

#include <array>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <sstream>

namespace hyperlab {

using nlohmann::ordered_json;

namespace {

class Stopwatch {
public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

ordered_json describe(const Hypergraph& h) {
    return ordered_json{{"r", h.r()}, {"vertex_count", h.vertex_count()}, {"edges", h.edges()}};
}

ordered_json describe(const ExtensionParams& p) {
    return ordered_json{{"edge_index", p.edge_index}, {"p", p.p}, {"q_ext", p.q_ext},
                        {"T", p.T},                   {"P", p.P}, {"Q", p.Q}};
}

std::string list_string(const std::vector<int>& values) {
    std::string out = "{";
    for (std::size_t i = 0; i < values.size(); ++i) out += (i ? "," : "") + std::to_string(values[i]);
    return out + "}";
}

void expect(VerificationReport& report, bool ok, const ordered_json& instance, std::string observed,
            std::string expected) {
    if (!ok) report.failures.push_back({instance, std::move(observed), std::move(expected)});
}

constexpr std::array<int, 3> kExtensionRanks{3, 4, 5};

}  // namespace

VerificationReport verify_lemma_rectangular(int r_max) {
    if (r_max > 12) throw Error(ErrorCode::ROutOfRange, "r_max must be <= 12");
    Stopwatch clock;
    VerificationReport report{"lemma-3.1", 0, {}, 0.0};
    for (int r = 1; r <= r_max; ++r) {
        for (const auto& sigma : enumerate_partitions(r)) {
            ++report.instances;
            const bool sym = is_symmetric(sigma);
            const bool rect = is_rectangular(sigma);
            expect(report, sym == rect, {{"r", r}, {"sigma", sigma.parts()}},
                   "symmetric=" + std::to_string(sym) + " rectangular=" + std::to_string(rect),
                   "symmetric == rectangular");
        }
    }
    report.elapsed_seconds = clock.seconds();
    return report;
}

VerificationReport verify_clique_theorem(const std::vector<int>& r_set, int n_max, int q_max, int max_vertices) {
    Stopwatch clock;
    VerificationReport report{"thm-3.2", 0, {}, 0.0};
    for (int r : r_set) {
        for (const auto& sigma : enumerate_partitions(r)) {
            const auto completion = rectangular_completion(sigma);
            const bool single_part = sigma.part_count() == 1;
            const bool all_ones = sigma.largest() == 1;
            for (int n = sigma.part_count(); n <= n_max; ++n) {
                for (int q = 1; q <= q_max && n * q <= max_vertices; ++q) {
                    ++report.instances;
                    const auto built = build_sigma_hypergraph(n, r, q, sigma);
                    const int omega = clique_number(built.graph).omega;
                    const ordered_json instance{{"r", r}, {"sigma", sigma.parts()}, {"n", n}, {"q", q}};
                    const std::string seen = "omega=" + std::to_string(omega);

                    bool hosts_r1 = false;
                    if (completion) {
                        hosts_r1 = n >= completion->part_count() && q >= completion->largest();
                    }
                    expect(report, (omega >= r + 1) == hosts_r1, instance, seen,
                           hosts_r1 ? "(r+1)-clique present" : "no (r+1)-clique");
                    if (omega >= r + 1)
                        expect(report, completion.has_value(), instance, seen,
                               "(r+1)-clique only for sigma of shape (D,...,D,D-1)");

                    const bool hosts_r2 = (single_part && q >= r + 2) || (all_ones && n >= r + 2);
                    expect(report, (omega >= r + 2) == hosts_r2, instance, seen,
                           hosts_r2 ? "(r+2)-clique present" : "no (r+2)-clique");

                    if (single_part && q >= r)
                        expect(report, omega == q, instance, seen, "omega = q (each class is a clique)");
                    if (all_ones && n >= r)
                        expect(report, omega == n, instance, seen, "omega = n (one vertex per class)");
                }
            }
        }
    }
    report.elapsed_seconds = clock.seconds();
    return report;
}

VerificationReport verify_sparse_construction(int t, int r, int max_vertices) {
    Stopwatch clock;
    VerificationReport report{"thm-3.5", 0, {}, 0.0};
    if (t < 1 || r < 4) throw Error(ErrorCode::ROutOfRange, "need t >= 1 and r >= 4");
    const int n = t + 1;
    const int q = (r - 2) * t + 1;
    if (n * q > max_vertices)
        throw Error(ErrorCode::SizeGuardExceeded, std::to_string(n * q) + " vertices exceeds the exact-chi guard of " +
                                                      std::to_string(max_vertices));
    const ordered_json instance{{"t", t}, {"r", r}, {"n", n}, {"q", q}, {"sigma", {r - 1, 1}}};
    ++report.instances;

    const auto built = build_sigma_hypergraph(n, r, q, Partition({r - 1, 1}));
    const Hypergraph& h = built.graph;

    const auto colouring = ab_colourable(h, n, 2, 2);
    expect(report, colouring.has_value(), instance, "no (2,2)-colouring with n colours",
           std::to_string(n) + " in (2,2)-spectrum");

    const auto chi = chromatic_number(h);
    expect(report, chi.chi == t + 1, instance, "chi=" + std::to_string(chi.chi), "chi=" + std::to_string(t + 1));
    expect(report, check_classical(h, chi.witness), instance, "chi witness improper", "proper witness");

    const int omega = clique_number(h).omega;
    expect(report, omega <= r, instance, "omega=" + std::to_string(omega), "omega <= " + std::to_string(r));

    const std::uint64_t formula = static_cast<std::uint64_t>(t) * static_cast<std::uint64_t>(t + 1) *
                                  static_cast<std::uint64_t>(q) *
                                  binomial(static_cast<std::uint64_t>(q), static_cast<std::uint64_t>(r - 1));
    expect(report, formula == h.edge_count(), instance, "edges=" + std::to_string(h.edge_count()),
           "edges=" + std::to_string(formula));
    expect(report, sigma_edge_count(n, q, built.meta.sigma) == formula, instance,
           "sigma_edge_count=" + std::to_string(sigma_edge_count(n, q, built.meta.sigma)),
           "edges=" + std::to_string(formula));

    const double bound = std::sqrt(static_cast<double>(h.vertex_count()) / (r - 2));
    expect(report, static_cast<double>(t + 1) >= bound, instance, "t+1=" + std::to_string(t + 1),
           ">= sqrt(|V|/(r-2))=" + std::to_string(bound));

    report.elapsed_seconds = clock.seconds();
    return report;
}

VerificationReport verify_extension_preservation(int trials, std::uint64_t seed, PreservationMode mode) {
    Stopwatch clock;
    VerificationReport report;
    report.theorem_id = mode == PreservationMode::Classical    ? "thm-2.1"
                        : mode == PreservationMode::Spectrum22 ? "thm-2.2"
                                                               : "thm-2.1+thm-2.2";
    const bool classical = mode != PreservationMode::Spectrum22;
    const bool spectral = mode != PreservationMode::Classical;

    for (int trial = 0; trial < trials; ++trial) {
        auto rng = trial_rng(seed, static_cast<std::uint64_t>(trial));
        const Hypergraph h = sample_hypergraph(rng, {kExtensionRanks, 8, true});
        const ExtensionParams params = sample_extension_params(rng, h);
        const Hypergraph ext = extend_pq(h, params);
        ++report.instances;
        const ordered_json instance{
            {"seed", seed}, {"trial", trial}, {"base", describe(h)}, {"params", describe(params)}};

        if (classical) {
            const auto before = chromatic_number(h);
            const auto after = chromatic_number(ext);
            expect(report, before.chi == after.chi, instance, "chi(ext)=" + std::to_string(after.chi),
                   "chi(ext)=chi(H)=" + std::to_string(before.chi));
            const Colouring lifted = extend_classical_colouring(h, params, before.witness);
            expect(report, check_classical(ext, lifted) && lifted.k() == before.chi, instance,
                   "lifted classical colouring invalid or uses " + std::to_string(lifted.k()) + " colours",
                   "proper with " + std::to_string(before.chi) + " colours");
        }
        if (spectral) {
            const Spectrum before = ab_spectrum(h, 2, 2);
            const Spectrum after = ab_spectrum(ext, 2, 2);
            expect(report, before.feasible == after.feasible, instance,
                   "Spec(ext)=" + list_string(after.feasible), "Spec(H)=" + list_string(before.feasible));
            for (const auto& [k, witness] : before.witnesses) {
                const Colouring lifted = extend_22_colouring(h, params, witness);
                expect(report, check_ab(ext, lifted, 2, 2) && lifted.k() == k, instance,
                       "lifted (2,2)-colouring for k=" + std::to_string(k) + " invalid",
                       "valid with " + std::to_string(k) + " colours");
            }
        }
    }
    report.elapsed_seconds = clock.seconds();
    return report;
}

VerificationReport verify_clique_stability(int trials, std::uint64_t seed, int steps_max) {
    Stopwatch clock;
    VerificationReport report{"prop-4.3", 0, {}, 0.0};
    for (int trial = 0; trial < trials; ++trial) {
        auto rng = trial_rng(seed, static_cast<std::uint64_t>(trial));
        const Hypergraph h = sample_hypergraph(rng, {kExtensionRanks, 8, true});
        const int t = uniform_int(rng, 1, (h.r() - 1) / 2);
        ++report.instances;

        const int omega0 = clique_number(h).omega;
        const int chi0 = chromatic_number(h).chi;
        const int target = std::max(omega0, h.r() + t);
        ordered_json instance{{"seed", seed}, {"trial", trial}, {"t", t}, {"base", describe(h)}};
        std::vector<std::size_t> chosen;

        Hypergraph current = h;
        for (int step = 1; step <= steps_max; ++step) {
            const std::size_t idx = static_cast<std::size_t>(uniform_below(rng, current.edge_count()));
            chosen.push_back(idx);
            current = star_extend(current, idx, t);
            instance["edge_choices"] = chosen;
            const int omega = clique_number(current).omega;
            const int chi = chromatic_number(current).chi;
            expect(report, omega == target, instance,
                   "step " + std::to_string(step) + ": omega=" + std::to_string(omega),
                   "omega=max(omega(H), r+t)=" + std::to_string(target));
            expect(report, chi == chi0, instance, "step " + std::to_string(step) + ": chi=" + std::to_string(chi),
                   "chi=" + std::to_string(chi0));
        }
    }
    report.elapsed_seconds = clock.seconds();
    return report;
}

VerificationReport verify_oracle_equivalence(int trials, std::uint64_t seed) {
    static constexpr std::array<int, 2> kRanks{3, 4};
    Stopwatch clock;
    VerificationReport report{"oracle", 0, {}, 0.0};
    for (int trial = 0; trial < trials; ++trial) {
        auto rng = trial_rng(seed, static_cast<std::uint64_t>(trial));
        const Hypergraph h = sample_hypergraph(rng, {kRanks, 8, false});
        ++report.instances;
        const std::array<std::pair<int, int>, 3> bounds{{{2, 2}, {2, h.r()}, {2, 3}}};
        for (const auto& [alpha, beta] : bounds) {
            const Spectrum fast = ab_spectrum(h, alpha, beta);
            const Spectrum slow = oracle_spectrum(h, alpha, beta);
            const ordered_json instance{
                {"seed", seed}, {"trial", trial}, {"alpha", alpha}, {"beta", beta}, {"hypergraph", describe(h)}};
            expect(report, fast.feasible == slow.feasible, instance, "search " + list_string(fast.feasible),
                   "oracle " + list_string(slow.feasible));
            expect(report, fast.witnesses == slow.witnesses, instance, "search witnesses differ",
                   "lexicographically least witnesses agree");
            for (const auto& [k, w] : fast.witnesses)
                expect(report, check_ab(h, w, alpha, beta) && w.k() == k, instance,
                       "unsound witness for k=" + std::to_string(k), "witness passes check_ab");
        }
    }
    report.elapsed_seconds = clock.seconds();
    return report;
}

ordered_json to_json(const VerificationReport& report, bool include_elapsed) {
    ordered_json out;
    out["theorem"] = report.theorem_id;
    out["instances"] = report.instances;
    out["pass"] = report.pass();
    if (include_elapsed) out["elapsed_seconds"] = report.elapsed_seconds;
    ordered_json failures = ordered_json::array();
    for (const auto& f : report.failures)
        failures.push_back(ordered_json{{"instance", f.instance}, {"observed", f.observed}, {"expected", f.expected}});
    out["failures"] = std::move(failures);
    return out;
}

std::string csv_header() { return "theorem,instances,failures,pass,elapsed_seconds"; }

std::string to_csv_row(const VerificationReport& report) {
    std::ostringstream out;
    out << report.theorem_id << ',' << report.instances << ',' << report.failures.size() << ','
        << (report.pass() ? "true" : "false") << ',' << std::fixed << std::setprecision(3) << report.elapsed_seconds;
    return out.str();
}

std::string to_table(const std::vector<VerificationReport>& reports) {
    std::ostringstream out;
    out << std::left << std::setw(18) << "theorem" << std::right << std::setw(10) << "instances" << std::setw(10)
        << "failures" << std::setw(8) << "result" << std::setw(12) << "seconds" << '\n';
    for (const auto& r : reports) {
        out << std::left << std::setw(18) << r.theorem_id << std::right << std::setw(10) << r.instances
            << std::setw(10) << r.failures.size() << std::setw(8) << (r.pass() ? "PASS" : "FAIL") << std::setw(12)
            << std::fixed << std::setprecision(3) << r.elapsed_seconds << '\n';
        for (const auto& f : r.failures)
            out << "  counterexample " << f.instance.dump() << "\n    observed: " << f.observed
                << "\n    expected: " << f.expected << '\n';
    }
    return out.str();
}

}  // namespace hyperlab
