// Parameter-system machinery on graded presentations: regular-sequence and
// filter-regular testing through a truncation window, Duflot depth bounds,
// and the completion bound for certified termination.
#pragma once

#include <optional>
#include <vector>

#include "coho/hilbert.hpp"
#include "coho/presentation.hpp"

namespace coho::ring {

struct ParameterSystem {
    std::vector<Polynomial> elements;
    std::vector<std::size_t> degrees;
    std::vector<std::ptrdiff_t> filter_degree_type;  // set by filter_regular_test
    bool regular = false;
    bool filter_regular = false;
    bool stable = false;  // set by callers that know the stable subspaces
};

struct RegularSequenceReport {
    bool regular = false;                       // drop matched on the whole window
    std::optional<std::size_t> failure_degree;  // first mismatching degree
    std::optional<std::size_t> failure_index;   // which parameter failed (0-based)
    std::size_t window = 0;                     // certified through this degree
    std::vector<HilbertData> quotient_series;   // series of R/(theta_1..theta_i), i = 0..
};

/// theta_i is regular on R/(theta_1..theta_{i-1}) iff the Hilbert series drops
/// by exactly (1 - t^{deg theta_i}), coefficientwise up to the window. Raises
/// std::invalid_argument for inhomogeneous parameters; a window too small to
/// see any coefficients is reported as failure to certify, never success.
RegularSequenceReport regular_sequence_test(const Presentation& pres,
                                            const std::vector<Polynomial>& params,
                                            std::size_t window);

enum class Verdict { kConclusive, kInconclusive };

struct FilterRegularReport {
    Verdict verdict = Verdict::kInconclusive;
    /// Max degree of ker(.theta_{i+1}) on R/(theta_1..theta_i), -1 for zero
    /// kernel; final entry is the top degree of R/(all parameters).
    std::vector<std::ptrdiff_t> filter_degree_type;
    std::size_t window = 0;
    std::vector<HilbertData> quotient_series;
};

/// Kernel dimensions come from Hilbert arithmetic:
/// dim ker_k = a^i_k - a^i_{k+e} + a^{i+1}_{k+e}. Inconclusive when a kernel
/// (or the final quotient) is still nonzero at the truncation boundary.
FilterRegularReport filter_regular_test(const Presentation& pres,
                                        const std::vector<Polynomial>& params,
                                        std::size_t window);

struct DepthReport {
    std::size_t duflot_lower = 0;  // rank of the centre of a Sylow subgroup
    std::size_t achieved = 0;      // longest verified regular prefix
};
DepthReport depth_bounds(const Presentation& pres, const std::vector<Polynomial>& params,
                         std::size_t center_rank, std::size_t window);

enum class CompletionVerdict { kComplete, kNotYet, kInconclusive };

/// Benson-style bound: with a conclusively filter-regular parameter system of
/// degrees d_1..d_r on tau_n, the presentation is complete once
/// n >= sum(d_i - 1). (The paper's own runs: Dickson degrees 8,12,14,15 give
/// 45; degrees 8,4,6,7 give 21.)
CompletionVerdict completion_test_benson(const Presentation& tau, std::size_t n,
                                         const std::vector<Polynomial>& params,
                                         std::size_t window);

}  // namespace coho::ring
