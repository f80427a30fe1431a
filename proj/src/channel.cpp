#include "gravmem/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace gravmem {

CMatrix bell_projector(std::size_t d) {
    CMatrix m(d * d, d * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) m(i * d + i, j * d + j) = 1.0;
    return m;
}

CMatrix choi_from_kraus(const std::vector<CMatrix>& kraus) {
    if (kraus.empty()) throw std::invalid_argument("choi_from_kraus: empty Kraus list");
    const std::size_t d = kraus.front().cols();
    CMatrix choi(d * d, d * d);
    for (const CMatrix& k : kraus) {
        if (k.rows() != d || k.cols() != d)
            throw std::invalid_argument("choi_from_kraus: Kraus operators must be square, equal size");
        // column vector (1 (x) K)|phi+>: component (i, a) = K(a, i)
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t a = 0; a < d; ++a)
                for (std::size_t j = 0; j < d; ++j)
                    for (std::size_t b = 0; b < d; ++b)
                        choi(i * d + a, j * d + b) += k(a, i) * std::conj(k(b, j));
    }
    return choi;
}

CMatrix apply_choi(const CMatrix& choi, const CMatrix& rho) {
    const std::size_t d = rho.rows();
    if (rho.cols() != d || choi.rows() != d * d || choi.cols() != d * d)
        throw std::invalid_argument("apply_choi: dimension mismatch");
    CMatrix out(d, d);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) {
            cplx acc = 0.0;
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = 0; j < d; ++j)
                    acc += rho(i, j) * choi(i * d + a, j * d + b);
            out(a, b) = acc;
        }
    return out;
}

CMatrix choi_input_marginal(const CMatrix& choi) {
    const std::size_t d2 = choi.rows();
    const auto d = static_cast<std::size_t>(std::llround(std::sqrt(double(d2))));
    return partial_trace(choi, {d, d}, {0});
}

ChoiCheck check_choi(const CMatrix& choi) {
    const std::size_t d2 = choi.rows();
    const auto d = static_cast<std::size_t>(std::llround(std::sqrt(double(d2))));
    ChoiCheck out{};
    out.hermiticity_defect = choi.hermiticity_defect();
    CMatrix sym(d2, d2);
    for (std::size_t i = 0; i < d2; ++i)
        for (std::size_t j = 0; j < d2; ++j)
            sym(i, j) = 0.5 * (choi(i, j) + std::conj(choi(j, i)));
    const HermEig eig = herm_eig(sym);
    out.min_eigenvalue = eig.eigenvalues.back();
    out.trace_defect = std::abs(choi.trace() - cplx(double(d)));
    out.marginal_defect = max_abs_diff(choi_input_marginal(choi), CMatrix::identity(d));
    return out;
}

}  // namespace gravmem
