#ifndef HYPERLAB_VERIFY_HPP
#define HYPERLAB_VERIFY_HPP

#include <hyperlab/limits.hpp>

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace hyperlab {

// `instance` holds everything needed to rebuild the failing input
// (construction parameters, seed, trial index and the edge list).
struct Counterexample {
    nlohmann::ordered_json instance;
    std::string observed;
    std::string expected;
};

struct VerificationReport {
    std::string theorem_id;
    std::size_t instances = 0;
    std::vector<Counterexample> failures;
    double elapsed_seconds = 0.0;

    bool pass() const noexcept { return failures.empty(); }
};

// Symmetric partitions are exactly the rectangular ones, for every r <= r_max.
VerificationReport verify_lemma_rectangular(int r_max);

/* Clique structure of H(n, r, q | sigma) over every sigma of every r in
 * r_set and every n <= n_max, q <= q_max with n*q <= max_vertices:
 *  - an (r+1)-clique exists iff sigma has a rectangular completion
 *    (D^m) and the hypergraph is large enough to host it (n >= m, q >= D);
 *  - an (r+2)-clique exists iff sigma = (r) with q >= r+2 or
 *    sigma = (1^r) with n >= r+2;
 *  - omega = q for sigma = (r), omega = n for sigma = (1^r) (when edges exist).
 */
VerificationReport verify_clique_theorem(const std::vector<int>& r_set, int n_max, int q_max,
                                         int max_vertices = 12);

// H(t+1, r, (r-2)t+1 | (r-1,1)): (2,2)-colourable with n colours, chi = t+1,
// omega <= r, closed-form edge count, chi >= sqrt(|V|/(r-2)).
VerificationReport verify_sparse_construction(int t, int r, int max_vertices = 16);

enum class PreservationMode { Classical, Spectrum22, Both };

// Random (H, params) pairs: chi and/or the (2,2)-spectrum are unchanged by
// extend_pq, and the constructive colouring extensions pass their checks.
VerificationReport verify_extension_preservation(int trials, std::uint64_t seed, PreservationMode mode);

// Repeated star extensions: omega becomes max(omega(H), r+t) after the
// first step and stays there; chi never moves.
VerificationReport verify_clique_stability(int trials, std::uint64_t seed, int steps_max);

// ab_spectrum against oracle_spectrum for (2,2), (2,r), (2,3).
VerificationReport verify_oracle_equivalence(int trials, std::uint64_t seed);

nlohmann::ordered_json to_json(const VerificationReport& report, bool include_elapsed = true);
std::string csv_header();
std::string to_csv_row(const VerificationReport& report);
std::string to_table(const std::vector<VerificationReport>& reports);

}  // namespace hyperlab

#endif  // HYPERLAB_VERIFY_HPP
