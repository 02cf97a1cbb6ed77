#include "ivif/weighting.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ivif/error.hpp"

namespace ivif {

const char* to_string(DistanceForm form) {
    return form == DistanceForm::Hybrid ? "hybrid" : "split_hybrid";
}

double dist_split_hybrid(const Ivifn& x, const Ivifn& y) {
    const double dlm = std::abs(x.lm() - y.lm());
    const double drm = std::abs(x.rm() - y.rm());
    const double dln = std::abs(x.ln() - y.ln());
    const double drn = std::abs(x.rn() - y.rn());
    return (dlm + drm) / 4.0 + (dln + drn) / 4.0 + std::max(dlm, drm) / 2.0 + std::max(dln, drn) / 2.0;
}

std::vector<Ivifn> negative_ideal(const GroupMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) throw ShapeError("negative_ideal: empty matrix");
    std::vector<Ivifn> nip;
    nip.reserve(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c) {
        Ivifn worst = m(0, c);
        for (std::size_t r = 1; r < m.rows(); ++r) worst = meet(worst, m(r, c));
        nip.push_back(worst);
    }
    return nip;
}

Grid<double> entropy_distance_matrix(const GroupMatrix& m, const std::vector<Ivifn>& nip,
                                     DistanceForm form) {
    if (nip.size() != m.cols()) {
        std::ostringstream os;
        os << "entropy_distance_matrix: ideal row has " << nip.size() << " entries for "
           << m.cols() << " columns";
        throw ShapeError(os.str());
    }
    Grid<double> out(m.rows(), m.cols(), 0.0);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            out(r, c) = form == DistanceForm::Hybrid ? dist_hybrid(m(r, c), nip[c])
                                                     : dist_split_hybrid(m(r, c), nip[c]);
        }
    }
    return out;
}

NormalizedDistances normalize_distances(const Grid<double>& dist) {
    NormalizedDistances out{Grid<double>(dist.rows(), dist.cols(), 0.0),
                            std::vector<bool>(dist.cols(), false)};
    for (std::size_t c = 0; c < dist.cols(); ++c) {
        double sum = 0.0;
        for (std::size_t r = 0; r < dist.rows(); ++r) {
            if (dist(r, c) < 0.0) throw DomainError("normalize_distances: negative distance");
            sum += dist(r, c);
        }
        if (sum <= 0.0) {
            out.degenerate[c] = true;
            continue;
        }
        for (std::size_t r = 0; r < dist.rows(); ++r) out.values(r, c) = dist(r, c) / sum;
    }
    return out;
}

std::vector<double> entropy(const NormalizedDistances& norm) {
    const std::size_t n = norm.values.rows();
    if (n < 2) throw DegenerateError("entropy needs at least two alternatives");
    const double scale = 1.0 / std::log(static_cast<double>(n));
    std::vector<double> out(norm.values.cols(), 1.0);
    for (std::size_t c = 0; c < norm.values.cols(); ++c) {
        if (norm.degenerate[c]) continue;
        double acc = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
            const double p = norm.values(r, c);
            if (p > 0.0) acc += p * std::log(p);
        }
        out[c] = std::clamp(-scale * acc, 0.0, 1.0);
    }
    return out;
}

EntropyBreakdown entropy_weights(const GroupMatrix& m, DistanceForm form) {
    if (!m.normalized) throw DomainError("entropy_weights: matrix must be normalized first");
    EntropyBreakdown out;
    out.nip = negative_ideal(m);
    out.dist = entropy_distance_matrix(m, out.nip, form);
    auto norm = normalize_distances(out.dist);
    out.entropy = entropy(norm);
    out.norm_dist = std::move(norm.values);
    out.degenerate_columns = std::move(norm.degenerate);

    double total = 0.0;
    for (double e : out.entropy) total += 1.0 - e;
    if (total <= 1e-12) {
        throw DegenerateError(
            "entropy_weights: every attribute has maximal entropy, so no attribute carries "
            "information (are all alternatives identical?)");
    }
    std::vector<double> w;
    w.reserve(out.entropy.size());
    for (double e : out.entropy) w.push_back((1.0 - e) / total);
    out.weights = WeightVector(std::move(w));
    return out;
}

}  // namespace ivif
