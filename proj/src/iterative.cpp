#include "bandix/iterative.hpp"

namespace bandix {

SolveReport<double> sip_solve(const PentaMatrix<double>& a, ConstView<double> b,
                              const SipConfig& cfg) {
    const std::size_t n = a.n();
    detail::require_length("sip_solve b", n, b.size());
    if (!(cfg.tolerance > 0.0)) {
        throw InvalidInput("sip tolerance must be positive");
    }
    if (cfg.max_iterations < 1) {
        throw InvalidInput("sip max_iterations must be >= 1");
    }
    SolveReport<double> rep;
    Stopwatch clock;
    OpCounter setup;

    const auto lu = ilu0_penta(a, setup);
    const auto defect = defect_matrix(lu, a, setup);

    Vector<double> x(n, 0.0);
    if (cfg.initial_guess) {
        detail::require_length("sip initial guess", n, cfg.initial_guess->size());
        x = *cfg.initial_guess;
    }
    auto r = residual(a, ConstView<double>(x), b, setup);
    double norm = inf_norm<double>(r);
    const double initial = norm;

    OpCounter& it = rep.iteration_ops;
    std::size_t k = 0;
    while (norm >= cfg.tolerance) {
        if (k >= cfg.max_iterations) {
            throw MaxIterationsExceeded(k, norm, x);
        }
        auto rhs = penta_matvec(defect, ConstView<double>(x), it);
        for (std::size_t i = 0; i < n; ++i) {
            rhs[i] += b[i];
        }
        it.add(n);
        const auto y = forward_sub(lu, ConstView<double>(rhs), it);
        x = backward_sub(lu, ConstView<double>(y), it);
        r = residual(a, ConstView<double>(x), b, it);
        norm = inf_norm<double>(r);
        ++k;
        if (cfg.on_iteration) {
            cfg.on_iteration(k, norm);
        }
        if (norm > cfg.divergence_factor * initial) {
            throw Diverged(k, norm);
        }
    }
    rep.wall_seconds = clock.seconds();
    rep.iterations = k;
    rep.ops = setup;
    rep.ops += it;
    rep.residual_inf = inf_norm<double>(residual(a, ConstView<double>(x), b));
    rep.x = std::move(x);
    return rep;
}

}  // namespace bandix
