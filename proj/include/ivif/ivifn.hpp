#pragma once

#include <array>
#include <iosfwd>
#include <string>

namespace ivif {

/// Two reals closer than this are treated as equal wherever the method
/// branches on a comparison (ordering, gain/loss split, TODIM cases).
inline constexpr double kTieTolerance = 1e-9;

/// Slack allowed when validating bounds produced by floating-point
/// arithmetic. Values outside [0,1] by more than this are rejected.
inline constexpr double kBoundSlack = 1e-12;

/// Interval-valued intuitionistic fuzzy number ([lm, rm], [ln, rn]).
///
/// Membership interval [lm, rm] and non-membership interval [ln, rn] are
/// sub-intervals of [0,1] with rm + rn <= 1. Construction validates and
/// throws DomainError on violation; values are never clamped.
class Ivifn {
public:
    Ivifn(double lm, double rm, double ln, double rn);
    explicit Ivifn(const std::array<double, 4>& bounds)
        : Ivifn(bounds[0], bounds[1], bounds[2], bounds[3]) {}

    /// ([1,1],[0,0])
    static Ivifn max();
    /// ([0,0],[1,1])
    static Ivifn min();

    double lm() const noexcept { return lm_; }
    double rm() const noexcept { return rm_; }
    double ln() const noexcept { return ln_; }
    double rn() const noexcept { return rn_; }
    std::array<double, 4> bounds() const noexcept { return {lm_, rm_, ln_, rn_}; }

    std::string to_string() const;

    friend bool operator==(const Ivifn&, const Ivifn&) = default;

private:
    double lm_, rm_, ln_, rn_;
};

std::ostream& operator<<(std::ostream& os, const Ivifn& x);

/// Checks the IVIFN invariants without constructing. Empty string if valid,
/// otherwise a description of the first violation.
std::string validate_bounds(double lm, double rm, double ln, double rn);

struct HesitancyInterval {
    double lo;
    double hi;
};

enum class Ordering { Less, Equal, Greater };

const char* to_string(Ordering o);

// Algebra.

Ivifn complement(const Ivifn& x);
Ivifn add(const Ivifn& x, const Ivifn& y);
Ivifn mul(const Ivifn& x, const Ivifn& y);
Ivifn join(const Ivifn& x, const Ivifn& y);
Ivifn meet(const Ivifn& x, const Ivifn& y);
/// k·x for k > 0; throws DomainError otherwise.
Ivifn scale(double k, const Ivifn& x);
/// x^k for k > 0; throws DomainError otherwise.
Ivifn power(const Ivifn& x, double k);

/// [1 - rm - rn, 1 - lm - ln]
HesitancyInterval hesitancy(const Ivifn& x);

// Score and accuracy functions.

/// ((lm+rm)(lm+ln) - (ln+rn)(rm+rn)) / 2, in [-1, 1]. Primary ordering key.
double score_wc(const Ivifn& x);
/// ((1-lm+rm)(1-lm-ln) + (1-ln+rn)(1-rm-rn)) / 2. Tie breaker for score_wc.
/// Note this assigns 0 to Ivifn::max().
double accuracy_wc(const Ivifn& x);
/// (lm - ln + rm - rn) / 2
double score_simple(const Ivifn& x);
/// (lm + ln + rm + rn) / 2
double accuracy_simple(const Ivifn& x);

/// Lexicographic on (score_wc, accuracy_wc) with kTieTolerance.
Ordering compare(const Ivifn& x, const Ivifn& y);

// Distances.

double dist_hamming(const Ivifn& x, const Ivifn& y);
double dist_hausdorff(const Ivifn& x, const Ivifn& y);
/// dist_hamming + dist_hausdorff
double dist_hybrid(const Ivifn& x, const Ivifn& y);

}  // namespace ivif
