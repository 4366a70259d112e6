#include "coho/parameters.hpp"

#include <stdexcept>

namespace coho::ring {

namespace {

// Series of R/(relations + params[0..i]) for i = -1..r-1, each truncated at
// the window.
std::vector<HilbertData> quotient_series_chain(const Presentation& pres,
                                               const std::vector<Polynomial>& params,
                                               std::size_t window) {
    PolyRing ring = pres.ring();
    for (const auto& p : params) {
        if (p.is_zero()) continue;
        if (!ring.is_homogeneous(p))
            throw std::invalid_argument("parameter is not homogeneous");
    }
    std::vector<HilbertData> out;
    GroebnerData gb = groebner_truncated(ring, pres.relations, window);
    out.push_back(hilbert_coefficients(ring, gb, window));
    for (const auto& p : params) {
        gb = groebner_extend(ring, std::move(gb), {p}, window);
        out.push_back(hilbert_coefficients(ring, gb, window));
    }
    return out;
}

}  // namespace

RegularSequenceReport regular_sequence_test(const Presentation& pres,
                                            const std::vector<Polynomial>& params,
                                            std::size_t window) {
    RegularSequenceReport rep;
    rep.window = window;
    rep.quotient_series = quotient_series_chain(pres, params, window);
    rep.regular = true;
    for (std::size_t i = 0; i < params.size() && rep.regular; ++i) {
        std::size_t e = params[i].is_zero() ? 0 : params[i].degree();
        const auto& prev = rep.quotient_series[i];
        const auto& cur = rep.quotient_series[i + 1];
        if (params[i].is_zero()) {
            // never regular: kernel is everything; flag at degree 0
            rep.regular = false;
            rep.failure_degree = 0;
            rep.failure_index = i;
            break;
        }
        for (std::size_t k = 0; k <= window; ++k) {
            std::int64_t expect = prev.at(k) - (k >= e ? prev.at(k - e) : 0);
            if (cur.at(k) != expect) {
                rep.regular = false;
                rep.failure_degree = k;
                rep.failure_index = i;
                break;
            }
        }
    }
    return rep;
}

FilterRegularReport filter_regular_test(const Presentation& pres,
                                        const std::vector<Polynomial>& params,
                                        std::size_t window) {
    FilterRegularReport rep;
    rep.window = window;
    rep.quotient_series = quotient_series_chain(pres, params, window);
    rep.verdict = Verdict::kConclusive;
    for (std::size_t i = 0; i < params.size(); ++i) {
        if (params[i].is_zero()) {
            rep.verdict = Verdict::kInconclusive;
            rep.filter_degree_type.push_back(window);
            continue;
        }
        std::size_t e = params[i].degree();
        const auto& prev = rep.quotient_series[i];
        const auto& cur = rep.quotient_series[i + 1];
        std::ptrdiff_t maxk = -1;
        if (e > window) {
            rep.verdict = Verdict::kInconclusive;
            rep.filter_degree_type.push_back(window);
            continue;
        }
        for (std::size_t k = 0; k + e <= window; ++k) {
            std::int64_t ker = prev.at(k) - prev.at(k + e) + cur.at(k + e);
            if (ker < 0) throw std::logic_error("negative kernel dimension");
            if (ker > 0) maxk = static_cast<std::ptrdiff_t>(k);
        }
        if (maxk == static_cast<std::ptrdiff_t>(window - e))
            rep.verdict = Verdict::kInconclusive;  // kernel persists at the boundary
        rep.filter_degree_type.push_back(maxk);
    }
    std::ptrdiff_t top = rep.quotient_series.back().top_degree();
    if (top == static_cast<std::ptrdiff_t>(window)) rep.verdict = Verdict::kInconclusive;
    rep.filter_degree_type.push_back(top);
    return rep;
}

DepthReport depth_bounds(const Presentation& pres, const std::vector<Polynomial>& params,
                         std::size_t center_rank, std::size_t window) {
    DepthReport rep;
    rep.duflot_lower = center_rank;
    auto rr = regular_sequence_test(pres, params, window);
    if (rr.regular) {
        rep.achieved = params.size();
    } else {
        rep.achieved = rr.failure_index.value_or(0);
    }
    return rep;
}

CompletionVerdict completion_test_benson(const Presentation& tau, std::size_t n,
                                         const std::vector<Polynomial>& params,
                                         std::size_t window) {
    auto fr = filter_regular_test(tau, params, window);
    if (fr.verdict == Verdict::kInconclusive) return CompletionVerdict::kInconclusive;
    std::size_t bound = 0;
    for (const auto& p : params) bound += p.degree() - 1;
    return n >= bound ? CompletionVerdict::kComplete : CompletionVerdict::kNotYet;
}

}  // namespace coho::ring
