#include "ivif/comparators.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>
#include <optional>
#include <sstream>

#include "ivif/error.hpp"
#include "ivif/ranking.hpp"

namespace ivif {

const char* to_string(Method m) {
    switch (m) {
        case Method::Ivifwa: return "ivifwa";
        case Method::Topsis: return "topsis";
        case Method::Taxonomy: return "taxonomy";
        case Method::Todim: return "todim";
        case Method::Edas: return "edas";
    }
    return "?";
}

Method method_from_string(const std::string& text) {
    std::string lower(text);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    for (Method m : {Method::Ivifwa, Method::Topsis, Method::Taxonomy, Method::Todim, Method::Edas}) {
        if (lower == to_string(m)) return m;
    }
    throw DomainError("unknown method '" + text + "' (expected ivifwa, topsis, taxonomy, todim or edas)");
}

const char* to_string(TopsisForm form) {
    return form == TopsisForm::AsPrinted ? "as_printed" : "single_weighting";
}

const char* to_string(TodimForm form) {
    return form == TodimForm::AsPrinted ? "as_printed" : "classical";
}

namespace {

void check_weights(const GroupMatrix& m, const WeightVector& weights, const char* op) {
    if (m.rows() == 0 || m.cols() == 0) throw ShapeError(std::string(op) + ": empty matrix");
    if (weights.size() != m.cols()) {
        std::ostringstream os;
        os << op << ": " << weights.size() << " weights for " << m.cols() << " attributes";
        throw ShapeError(os.str());
    }
}

void require_two_rows(const GroupMatrix& m, const char* op) {
    if (m.rows() < 2) throw DegenerateError(std::string(op) + " needs at least two alternatives");
}

double abs_gap_sum(const Ivifn& x, const Ivifn& y) {
    return std::abs(x.lm() - y.lm()) + std::abs(x.rm() - y.rm()) + std::abs(x.ln() - y.ln()) +
           std::abs(x.rn() - y.rn());
}

// scale(w, x), extended to w = 0 with the 0^0 = 1 convention.
Ivifn weighted_cell(double w, const Ivifn& x) { return w == 0.0 ? Ivifn::min() : scale(w, x); }

}  // namespace

IvifwaResult ivifwa_rank(const GroupMatrix& m, const WeightVector& weights) {
    check_weights(m, weights, "ivifwa_rank");
    IvifwaResult out;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        const Ivifn agg = ivifwa(m.cells.row(r), weights);
        out.aggregate.push_back(agg);
        out.sf.push_back(score_simple(agg));
        out.af.push_back(accuracy_simple(agg));
    }
    out.ranking.resize(m.rows());
    std::iota(out.ranking.begin(), out.ranking.end(), std::size_t{0});
    std::stable_sort(out.ranking.begin(), out.ranking.end(), [&](std::size_t a, std::size_t b) {
        if (out.sf[a] != out.sf[b]) return out.sf[a] > out.sf[b];
        return out.af[a] > out.af[b];
    });
    return out;
}

TopsisResult topsis(const GroupMatrix& m, const std::vector<AttributeSpec>& attrs,
                    const WeightVector& weights, TopsisForm form) {
    check_weights(m, weights, "topsis");
    require_two_rows(m, "TOPSIS");
    if (attrs.size() != m.cols()) throw ShapeError("topsis: attribute list does not match columns");
    const std::size_t n = m.rows(), k = m.cols();

    Grid<Ivifn> weighted(n, k, Ivifn::min());
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < k; ++c) {
            const Ivifn raw = attrs[c].kind == AttributeKind::Cost && m.normalized
                                  ? complement(m(r, c))
                                  : m(r, c);
            weighted(r, c) = weighted_cell(weights[c], raw);
        }
    }

    TopsisResult out;
    out.form = form;
    for (std::size_t c = 0; c < k; ++c) {
        Ivifn best = weighted(0, c), worst = weighted(0, c);
        for (std::size_t r = 1; r < n; ++r) {
            best = join(best, weighted(r, c));
            worst = meet(worst, weighted(r, c));
        }
        if (attrs[c].kind == AttributeKind::Cost) std::swap(best, worst);
        out.pis.push_back(best);
        out.nis.push_back(worst);
    }

    const double prefactor = 1.0 / (4.0 * static_cast<double>(n));
    for (std::size_t r = 0; r < n; ++r) {
        double dp = 0.0, dm = 0.0;
        for (std::size_t c = 0; c < k; ++c) {
            const double f = form == TopsisForm::AsPrinted ? weights[c] : 1.0;
            dp += f * abs_gap_sum(weighted(r, c), out.pis[c]);
            dm += f * abs_gap_sum(weighted(r, c), out.nis[c]);
        }
        out.d_plus.push_back(prefactor * dp);
        out.d_minus.push_back(prefactor * dm);
        const double total = out.d_plus.back() + out.d_minus.back();
        if (total > 0.0) {
            out.closeness.push_back(out.d_minus.back() / total);
        } else {
            out.closeness.push_back(0.5);
            out.degenerate = true;
        }
    }
    out.ranking = rank_descending(out.closeness);
    return out;
}

TaxonomyResult taxonomy(const GroupMatrix& m, const WeightVector& weights, const TaxonomyOptions& options) {
    check_weights(m, weights, "taxonomy");
    require_two_rows(m, "Taxonomy");
    const std::size_t n = m.rows(), k = m.cols();

    auto weighted_gap = [&](std::span<const Ivifn> a, const std::vector<Ivifn>& b) {
        double acc = 0.0;
        for (std::size_t c = 0; c < k; ++c) acc += weights[c] * abs_gap_sum(a[c], b[c]);
        return acc / 4.0;
    };

    TaxonomyResult out;
    out.dist_matrix = Grid<double>(n, n, 0.0);
    for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t q = p + 1; q < n; ++q) {
            double acc = 0.0;
            for (std::size_t c = 0; c < k; ++c) acc += weights[c] * abs_gap_sum(m(p, c), m(q, c));
            out.dist_matrix(p, q) = out.dist_matrix(q, p) = acc / 4.0;
        }
    }

    out.row_mean.assign(n, 0.0);
    for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t q = 0; q < n; ++q) out.row_mean[p] += out.dist_matrix(p, q);
        out.row_mean[p] /= static_cast<double>(n - 1);
    }
    auto mean_std = [](const std::vector<double>& v) {
        const double mean = std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
        double var = 0.0;
        for (double x : v) var += (x - mean) * (x - mean);
        return std::pair{mean, std::sqrt(var / static_cast<double>(v.size()))};
    };
    const auto [g_mean, g_std] = mean_std(out.row_mean);
    out.lower_bound = g_mean - 2.0 * g_std;
    out.upper_bound = g_mean + 2.0 * g_std;
    out.outlier.assign(n, false);
    for (std::size_t p = 0; p < n; ++p) {
        out.outlier[p] = out.row_mean[p] < out.lower_bound - kTieTolerance ||
                         out.row_mean[p] > out.upper_bound + kTieTolerance;
    }

    std::vector<bool> included(n, true);
    if (options.drop_outliers) {
        for (std::size_t p = 0; p < n; ++p) included[p] = !out.outlier[p];
    }

    for (std::size_t c = 0; c < k; ++c) {
        std::optional<Ivifn> best;
        for (std::size_t r = 0; r < n; ++r) {
            if (!included[r]) continue;
            best = best ? join(*best, m(r, c)) : m(r, c);
        }
        out.ideal.push_back(*best);
    }

    for (std::size_t r = 0; r < n; ++r) out.k_ro.push_back(weighted_gap(m.cells.row(r), out.ideal));

    std::vector<double> k_included;
    for (std::size_t r = 0; r < n; ++r) {
        if (included[r]) k_included.push_back(out.k_ro[r]);
    }
    const auto [k_mean, k_std] = mean_std(k_included);
    out.k_bound = k_mean + 2.0 * k_std;
    if (!(out.k_bound > 0.0)) {
        throw DegenerateError(
            "taxonomy: every alternative coincides with the ideal pattern (K = 0), so development "
            "values are undefined");
    }
    for (double kr : out.k_ro) out.development.push_back(kr / out.k_bound);

    out.ranking = rank_ascending(out.development);
    std::stable_partition(out.ranking.begin(), out.ranking.end(),
                          [&](std::size_t r) { return included[r]; });
    return out;
}

TodimResult todim(const GroupMatrix& m, const WeightVector& weights, double theta, TodimForm form) {
    check_weights(m, weights, "todim");
    require_two_rows(m, "TODIM");
    if (!(theta > 0.0) || !std::isfinite(theta)) {
        std::ostringstream os;
        os << "todim: theta must be positive, got " << theta;
        throw DomainError(os.str());
    }
    const std::size_t n = m.rows(), k = m.cols();

    TodimResult out;
    out.form = form;
    out.theta = theta;
    out.normalized = Grid<std::array<double, 4>>(n, k, {0.0, 0.0, 0.0, 0.0});
    for (std::size_t c = 0; c < k; ++c) {
        double mem = 0.0, non = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
            const Ivifn& x = m(r, c);
            mem += x.lm() * x.lm() + x.rm() * x.rm();
            non += x.ln() * x.ln() + x.rn() * x.rn();
        }
        // An all-zero column half stays zero.
        const double dm = mem > 0.0 ? std::sqrt(mem) : 1.0;
        const double dn = non > 0.0 ? std::sqrt(non) : 1.0;
        for (std::size_t r = 0; r < n; ++r) {
            const Ivifn& x = m(r, c);
            out.normalized(r, c) = {x.lm() / dm, x.rm() / dm, x.ln() / dn, x.rn() / dn};
        }
    }

    const double w_max = weights.max();
    std::vector<double> rel(k);
    for (std::size_t c = 0; c < k; ++c) rel[c] = weights[c] / w_max;
    const double rel_sum = std::accumulate(rel.begin(), rel.end(), 0.0);

    out.partial.assign(k, Grid<double>(n, n, 0.0));
    out.dominance = Grid<double>(n, n, 0.0);
    for (std::size_t c = 0; c < k; ++c) {
        if (rel[c] == 0.0) continue;
        for (std::size_t p = 0; p < n; ++p) {
            const double sp = score_simple(m(p, c));
            for (std::size_t r = 0; r < n; ++r) {
                if (p == r) continue;
                const double sr = score_simple(m(r, c));
                const auto& a = out.normalized(p, c);
                const auto& b = out.normalized(r, c);
                double gap = 0.0;
                for (int i = 0; i < 4; ++i) gap += std::abs(a[i] - b[i]);
                const double d = std::sqrt(gap / 4.0);
                double phi = 0.0;
                if (sp > sr + kTieTolerance) {
                    phi = form == TodimForm::AsPrinted ? std::sqrt(rel[c] / rel_sum) * d
                                                       : std::sqrt(rel[c] * d / rel_sum);
                } else if (sp < sr - kTieTolerance) {
                    phi = form == TodimForm::AsPrinted ? -std::sqrt(rel[c] / rel_sum) * d / theta
                                                       : -std::sqrt(rel_sum * d / rel[c]) / theta;
                }
                out.partial[c](p, r) = phi;
                out.dominance(p, r) += phi;
            }
        }
    }

    out.overall.assign(n, 0.0);
    for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t r = 0; r < n; ++r) out.overall[p] += out.dominance(p, r);
    }
    const auto [lo, hi] = std::minmax_element(out.overall.begin(), out.overall.end());
    const double span = *hi - *lo;
    if (span <= kTieTolerance) {
        out.degenerate = true;
        out.xi.assign(n, 0.5);
    } else {
        for (double v : out.overall) out.xi.push_back((v - *lo) / span);
    }
    out.ranking = rank_descending(out.xi);
    return out;
}

}  // namespace ivif
