#include <fockcalc/forms.hpp>
#include <fockcalc/parallel.hpp>

#include <stdexcept>
#include <utility>

namespace fockcalc {

namespace {

int rational_sign(const Rational& r) {
    if (r > 0) return 1;
    if (r < 0) return -1;
    return 0;
}

void check_square(const PiMatrix& m) {
    for (const auto& row : m.entries)
        if (static_cast<int>(row.size()) != m.dim())
            throw std::invalid_argument("matrix is ragged");
}

}  // namespace

bool is_hermitian(const PiMatrix& m) {
    check_square(m);
    for (int j = 0; j < m.dim(); ++j)
        for (int k = j; k < m.dim(); ++k)
            if (m.entries[j][k] != conj(m.entries[k][j])) return false;
    return true;
}

PiScalar quadratic_form_value(const PiMatrix& m, const std::vector<GaussianRational>& x) {
    check_square(m);
    if (static_cast<int>(x.size()) != m.dim())
        throw std::invalid_argument("vector length does not match matrix dimension");
    GaussianRational acc;
    for (int j = 0; j < m.dim(); ++j) {
        if (x[j].is_zero()) continue;
        for (int k = 0; k < m.dim(); ++k) {
            if (x[k].is_zero() || m.entries[j][k].is_zero()) continue;
            acc = acc + conj(x[j]) * m.entries[j][k] * x[k];
        }
    }
    return PiScalar(acc);
}

PiMatrix commutator_gram(const MixedSymbol& phi, int N, FockParams params) {
    if (N < 0) throw std::domain_error("basis truncation N must be >= 0");
    int dim = N + 1;
    std::vector<AnalyticPoly> img(dim), adj_img(dim);
    parallel_for(dim, [&](int k) {
        AnalyticPoly zk = AnalyticPoly::monomial(k);
        img[k] = toeplitz_apply(phi, zk, params);
        adj_img[k] = toeplitz_adjoint_apply(phi, zk, params);
    });
    PiMatrix g;
    g.entries.assign(dim, std::vector<GaussianRational>(dim));
    parallel_for(dim, [&](int j) {
        for (int k = 0; k < dim; ++k) {
            PiScalar v = inner_product(img[k], img[j], params) -
                         inner_product(adj_img[k], adj_img[j], params);
            g.entries[j][k] = v.coeff;
        }
    });
    return g;
}

PiMatrix quasi_defect_matrix(const MixedSymbol& phi, int N, FockParams params) {
    if (N < 0) throw std::domain_error("basis truncation N must be >= 0");
    int dim = N + 1;
    std::vector<AnalyticPoly> defect(dim);
    parallel_for(dim, [&](int k) {
        AnalyticPoly tzk = toeplitz_apply(phi, AnalyticPoly::monomial(k), params);
        AnalyticPoly left =
            toeplitz_adjoint_apply(phi, toeplitz_apply(phi, tzk, params), params);
        AnalyticPoly right =
            toeplitz_apply(phi, toeplitz_adjoint_apply(phi, tzk, params), params);
        defect[k] = left - right;
    });
    PiMatrix q;
    q.entries.assign(dim, std::vector<GaussianRational>(dim));
    for (int k = 0; k < dim; ++k)
        for (const auto& [deg, c] : defect[k].terms())
            if (deg <= N)
                q.entries[deg][k] = c * GaussianRational(Rational(factorial(deg + params.m)));
    return q;
}

PSDVerdict psd_test(const PiMatrix& m) {
    if (!is_hermitian(m)) throw std::invalid_argument("psd_test requires a Hermitian matrix");
    const int n = m.dim();
    auto a = m.entries;
    std::vector<bool> active(n, true);

    struct Pivot {
        int index;
        GaussianRational d;                    // real and positive
        std::vector<GaussianRational> column;  // entries at then-active rows
    };
    std::vector<Pivot> pivots;

    // Sends a certificate for the current reduced matrix back through the
    // recorded eliminations: each pivot contributes x_i = -(b^* x)/d, which
    // preserves the value of the quadratic form.
    auto refute = [&](std::vector<GaussianRational> seed) {
        for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
            GaussianRational dot;
            for (int j = 0; j < n; ++j)
                if (!it->column[j].is_zero()) dot = dot + conj(it->column[j]) * seed[j];
            seed[it->index] = -(dot / it->d);
        }
        GaussianRational lead;
        for (const auto& c : seed)
            if (!c.is_zero()) {
                lead = c;
                break;
            }
        for (auto& c : seed) c = c / lead;  // rescaling keeps the value negative
        PSDVerdict verdict;
        verdict.status = PSDStatus::NotPSD;
        verdict.witness_value = quadratic_form_value(m, seed);
        verdict.witness = std::move(seed);
        return verdict;
    };

    for (;;) {
        for (int r = 0; r < n; ++r)
            if (active[r] && rational_sign(a[r][r].re) < 0) {
                std::vector<GaussianRational> seed(n);
                seed[r] = GaussianRational(1);
                return refute(std::move(seed));
            }
        int p = -1;
        for (int i = 0; i < n && p < 0; ++i)
            if (active[i] && rational_sign(a[i][i].re) > 0) p = i;
        if (p < 0) break;

        Pivot piv;
        piv.index = p;
        piv.d = a[p][p];
        piv.column.assign(n, GaussianRational());
        for (int j = 0; j < n; ++j)
            if (active[j] && j != p) piv.column[j] = a[j][p];
        for (int j = 0; j < n; ++j) {
            if (!active[j] || j == p || piv.column[j].is_zero()) continue;
            for (int k = 0; k < n; ++k) {
                if (!active[k] || k == p || a[p][k].is_zero()) continue;
                a[j][k] = a[j][k] - piv.column[j] * a[p][k] / piv.d;
            }
        }
        active[p] = false;
        pivots.push_back(std::move(piv));
    }

    // Every active diagonal is now exactly zero, so any surviving coupling
    // alpha at (j, k) is refuted by e_j - conj(alpha) e_k, of value
    // -2|alpha|^2.
    for (int j = 0; j < n; ++j) {
        if (!active[j]) continue;
        for (int k = 0; k < n; ++k) {
            if (!active[k] || k == j || a[j][k].is_zero()) continue;
            std::vector<GaussianRational> seed(n);
            seed[j] = GaussianRational(1);
            seed[k] = -conj(a[j][k]);
            return refute(std::move(seed));
        }
    }
    return {};
}

ZeroScanResult quasi_zero_test(const MixedSymbol& phi, int N, FockParams params) {
    PiMatrix q = quasi_defect_matrix(phi, N, params);
    for (int j = 0; j < q.dim(); ++j)
        for (int k = 0; k < q.dim(); ++k)
            if (!q.entries[j][k].is_zero())
                return {false, j, k, PiScalar(q.entries[j][k])};
    return {};
}

}  // namespace fockcalc
