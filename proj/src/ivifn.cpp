#include "ivif/ivifn.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>

#include "ivif/error.hpp"

namespace ivif {

namespace {

bool in_unit(double v) { return v >= -kBoundSlack && v <= 1.0 + kBoundSlack; }

void require_positive(double k, const char* op) {
    if (!(k > 0.0) || !std::isfinite(k)) {
        std::ostringstream os;
        os << op << ": exponent/multiplier must be a positive real, got " << k;
        throw DomainError(os.str());
    }
}

}  // namespace

std::string validate_bounds(double lm, double rm, double ln, double rn) {
    std::ostringstream os;
    if (!std::isfinite(lm) || !std::isfinite(rm) || !std::isfinite(ln) || !std::isfinite(rn)) {
        os << "non-finite bound";
    } else if (!in_unit(lm) || !in_unit(rm) || !in_unit(ln) || !in_unit(rn)) {
        os << "bounds must lie in [0,1]";
    } else if (lm > rm + kBoundSlack) {
        os << "membership interval reversed (lm=" << lm << " > rm=" << rm << ")";
    } else if (ln > rn + kBoundSlack) {
        os << "non-membership interval reversed (ln=" << ln << " > rn=" << rn << ")";
    } else if (rm + rn > 1.0 + kBoundSlack) {
        os << "rm + rn = " << rm + rn << " exceeds 1";
    }
    return os.str();
}

Ivifn::Ivifn(double lm, double rm, double ln, double rn) : lm_(lm), rm_(rm), ln_(ln), rn_(rn) {
    if (auto err = validate_bounds(lm, rm, ln, rn); !err.empty()) {
        throw DomainError("invalid IVIFN " + to_string() + ": " + err);
    }
}

Ivifn Ivifn::max() { return {1.0, 1.0, 0.0, 0.0}; }
Ivifn Ivifn::min() { return {0.0, 0.0, 1.0, 1.0}; }

std::string Ivifn::to_string() const {
    std::ostringstream os;
    os << *this;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Ivifn& x) {
    return os << "([" << x.lm() << ", " << x.rm() << "], [" << x.ln() << ", " << x.rn() << "])";
}

const char* to_string(Ordering o) {
    switch (o) {
        case Ordering::Less: return "less";
        case Ordering::Equal: return "equal";
        case Ordering::Greater: return "greater";
    }
    return "?";
}

Ivifn complement(const Ivifn& x) { return {x.ln(), x.rn(), x.lm(), x.rm()}; }

Ivifn add(const Ivifn& x, const Ivifn& y) {
    return {x.lm() + y.lm() - x.lm() * y.lm(), x.rm() + y.rm() - x.rm() * y.rm(),
            x.ln() * y.ln(), x.rn() * y.rn()};
}

Ivifn mul(const Ivifn& x, const Ivifn& y) {
    return {x.lm() * y.lm(), x.rm() * y.rm(),
            x.ln() + y.ln() - x.ln() * y.ln(), x.rn() + y.rn() - x.rn() * y.rn()};
}

Ivifn join(const Ivifn& x, const Ivifn& y) {
    return {std::max(x.lm(), y.lm()), std::max(x.rm(), y.rm()),
            std::min(x.ln(), y.ln()), std::min(x.rn(), y.rn())};
}

Ivifn meet(const Ivifn& x, const Ivifn& y) {
    return {std::min(x.lm(), y.lm()), std::min(x.rm(), y.rm()),
            std::max(x.ln(), y.ln()), std::max(x.rn(), y.rn())};
}

Ivifn scale(double k, const Ivifn& x) {
    require_positive(k, "scale");
    return {1.0 - std::pow(1.0 - x.lm(), k), 1.0 - std::pow(1.0 - x.rm(), k),
            std::pow(x.ln(), k), std::pow(x.rn(), k)};
}

Ivifn power(const Ivifn& x, double k) {
    require_positive(k, "power");
    return {std::pow(x.lm(), k), std::pow(x.rm(), k),
            1.0 - std::pow(1.0 - x.ln(), k), 1.0 - std::pow(1.0 - x.rn(), k)};
}

HesitancyInterval hesitancy(const Ivifn& x) {
    return {1.0 - x.rm() - x.rn(), 1.0 - x.lm() - x.ln()};
}

double score_wc(const Ivifn& x) {
    return ((x.lm() + x.rm()) * (x.lm() + x.ln()) - (x.ln() + x.rn()) * (x.rm() + x.rn())) / 2.0;
}

double accuracy_wc(const Ivifn& x) {
    return ((1.0 - x.lm() + x.rm()) * (1.0 - x.lm() - x.ln()) +
            (1.0 - x.ln() + x.rn()) * (1.0 - x.rm() - x.rn())) / 2.0;
}

double score_simple(const Ivifn& x) { return (x.lm() - x.ln() + x.rm() - x.rn()) / 2.0; }

double accuracy_simple(const Ivifn& x) { return (x.lm() + x.ln() + x.rm() + x.rn()) / 2.0; }

Ordering compare(const Ivifn& x, const Ivifn& y) {
    const double ds = score_wc(x) - score_wc(y);
    if (ds > kTieTolerance) return Ordering::Greater;
    if (ds < -kTieTolerance) return Ordering::Less;
    const double da = accuracy_wc(x) - accuracy_wc(y);
    if (da > kTieTolerance) return Ordering::Greater;
    if (da < -kTieTolerance) return Ordering::Less;
    return Ordering::Equal;
}

namespace {

std::array<double, 4> abs_diffs(const Ivifn& x, const Ivifn& y) {
    return {std::abs(x.lm() - y.lm()), std::abs(x.rm() - y.rm()),
            std::abs(x.ln() - y.ln()), std::abs(x.rn() - y.rn())};
}

}  // namespace

double dist_hamming(const Ivifn& x, const Ivifn& y) {
    const auto d = abs_diffs(x, y);
    return (d[0] + d[1] + d[2] + d[3]) / 4.0;
}

double dist_hausdorff(const Ivifn& x, const Ivifn& y) {
    const auto d = abs_diffs(x, y);
    return std::max({d[0], d[1], d[2], d[3]}) / 2.0;
}

double dist_hybrid(const Ivifn& x, const Ivifn& y) { return dist_hamming(x, y) + dist_hausdorff(x, y); }

}  // namespace ivif
