#pragma once

#include <cstddef>
#include <vector>

#include "zerocross/persistence.hpp"
#include "zerocross/time_series.hpp"

namespace zerocross {

// Sample times split by strict sign, both sets augmented with t_0 and t_N.
// Points are kept as grid indices so that gaps between consecutive same-sign
// samples come out as exact multiples of dt (persistence = index delta * dt);
// computing them as time differences would leave gaps off by an ulp and break
// the strict "> dt" retention on clean signals.
struct SignSplit {
    std::vector<std::size_t> p_indices; // value > 0, plus 0 and N
    std::vector<std::size_t> q_indices; // value < 0, plus 0 and N
    std::vector<std::size_t> zero_indices; // value == 0 exactly
    double t0 = 0.0;
    double dt = 1.0;
    std::size_t n = 0; // sample count

    double time_at(std::size_t i) const { return t0 + static_cast<double>(i) * dt; }
    std::vector<double> p_points() const;
    std::vector<double> q_points() const;
    std::vector<double> zero_sample_times() const;
};

SignSplit sign_split(const TimeSeries& s);

enum class GapSource { P, Q };

// A retained high-persistence gap of one sign set.
struct GapInterval {
    double lo = 0.0;
    double hi = 0.0;
    std::size_t lo_index = 0;
    std::size_t hi_index = 0;
    GapSource source = GapSource::P;
    double persistence = 0.0; // hi - lo
};

enum class Retention { Strict, Inclusive }; // persistence > mu vs >= mu

// Gaps of both sets whose persistence passes the retention predicate;
// P gaps first, then Q gaps, each in left-to-right order.
std::vector<GapInterval> retained_gaps(const SignSplit& split, double mu,
                                       Retention mode = Retention::Strict);

enum class EndpointKind { PositiveSample, NegativeSample, Boundary };

const char* to_string(EndpointKind k);

// Candidate zero-crossing interval. uncertain == false exactly when the two
// endpoint kinds are {positive-sample, negative-sample}; then the sampled
// function provably changes sign inside (intermediate value theorem).
struct BracketInterval {
    double lo = 0.0;
    double hi = 0.0;
    EndpointKind lo_type = EndpointKind::Boundary;
    EndpointKind hi_type = EndpointKind::Boundary;
    bool uncertain = true;
    double estimate = 0.0;           // (lo + hi) / 2
    bool contains_zero_sample = false; // diagnostic: an exact-zero sample lies inside
};

// The interleave: collect the 2K retained-gap endpoints, sort ascending
// (ties: P before Q, degenerate intervals dropped), augment with t_0 and t_N,
// and return [r_{-1},r_0], [r_1,r_2], ..., [r_{2K-1},r_{2K}] minus zero-length
// ones. Endpoints carry the sign of their sample; augmented boundary points
// are typed Boundary and always flag the bracket uncertain. With no retained
// gaps at all the whole domain [t_0, t_N] is returned, flagged.
std::vector<BracketInterval> bracket(const TimeSeries& s, double mu,
                                     Retention mode = Retention::Strict);

std::vector<BracketInterval> bracket(const SignSplit& split, double mu,
                                     Retention mode = Retention::Strict);

// midpoints, order-preserving
std::vector<double> estimates(const std::vector<BracketInterval>& brackets);

// Per-set diagrams of the augmented split (deaths exact in units of dt);
// left_index is the ordinal within that set's sorted point sequence.
PersistenceDiagram split_diagram(const SignSplit& split, GapSource which);

} // namespace zerocross
