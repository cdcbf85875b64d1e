// Copyright 2026 The cutq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cutq/optimize.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <deque>
#include <limits>

#include "cutq/rng.hpp"

namespace cutq {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 6.28318530717958647692;
}  // namespace

NonFiniteObjectiveError::NonFiniteObjectiveError(int coordinate, double value)
    : std::runtime_error("objective returned non-finite value " + std::to_string(value) +
                         " while probing coordinate " + std::to_string(coordinate)),
      coordinate_(coordinate) {}

std::vector<double> cga_gradient(const Objective& f, std::span<const double> x,
                                 std::span<const double> step_per_coordinate, ThreadPool* pool) {
    const std::size_t n = x.size();
    std::vector<double> plus(n), minus(n);
    auto probe = [&](std::size_t i) {
        std::vector<double> point(x.begin(), x.end());
        const double h = step_per_coordinate[i];
        point[i] = x[i] + h;
        plus[i] = f(point);
        point[i] = x[i] - h;
        minus[i] = f(point);
    };
    if (pool) {
        pool->parallel_for(n, probe);
    } else {
        for (std::size_t i = 0; i < n; ++i) probe(i);
    }
    std::vector<double> grad(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!std::isfinite(plus[i])) throw NonFiniteObjectiveError(static_cast<int>(i), plus[i]);
        if (!std::isfinite(minus[i])) throw NonFiniteObjectiveError(static_cast<int>(i), minus[i]);
        grad[i] = (plus[i] - minus[i]) / (2.0 * step_per_coordinate[i]);
    }
    return grad;
}

std::vector<double> cga_gradient(const Objective& f, std::span<const double> x, double step,
                                 ThreadPool* pool) {
    std::vector<double> h(x.size(), step);
    return cga_gradient(f, x, h, pool);
}

namespace {

// Value and gradient of f at x, with the center evaluation and the 2n stencil
// evaluations dispatched together (the 2n+1 concurrent calls per iteration).
struct FusedEval {
    double value = 0.0;
    std::vector<double> grad;
};

class LbfgsDriver {
  public:
    LbfgsDriver(const Objective& f, const OptimizerConfig& cfg, ThreadPool* pool)
        : f_(f), cfg_(cfg), pool_(pool) {}

    std::int64_t evaluations() const { return evaluations_; }

    FusedEval evaluate(std::span<const double> x) {
        const std::size_t n = x.size();
        std::vector<double> h(n);
        for (std::size_t i = 0; i < n; ++i)
            h[i] = cfg_.scale_grad_step ? cfg_.grad_step * std::max(1.0, std::abs(x[i])) : cfg_.grad_step;

        FusedEval out;
        out.grad.resize(n);
        std::vector<double> plus(n), minus(n);
        double center = 0.0;
        auto task = [&](std::size_t t) {
            std::vector<double> point(x.begin(), x.end());
            if (t == 2 * n) {
                center = f_(point);
                return;
            }
            const std::size_t i = t / 2;
            point[i] = (t % 2 == 0) ? x[i] + h[i] : x[i] - h[i];
            ((t % 2 == 0) ? plus[i] : minus[i]) = f_(point);
        };
        if (pool_) {
            pool_->parallel_for(2 * n + 1, task);
        } else {
            for (std::size_t t = 0; t < 2 * n + 1; ++t) task(t);
        }
        evaluations_ += static_cast<std::int64_t>(2 * n + 1);

        out.value = center;
        for (std::size_t i = 0; i < n; ++i) {
            if (!std::isfinite(plus[i])) throw NonFiniteObjectiveError(static_cast<int>(i), plus[i]);
            if (!std::isfinite(minus[i])) throw NonFiniteObjectiveError(static_cast<int>(i), minus[i]);
            out.grad[i] = (plus[i] - minus[i]) / (2.0 * h[i]);
        }
        return out;
    }

  private:
    const Objective& f_;
    const OptimizerConfig& cfg_;
    ThreadPool* pool_;
    std::int64_t evaluations_ = 0;
};

double max_abs(std::span<const double> v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

double dot(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace

OptimizationRun lbfgs_maximize(const Objective& f, std::span<const double> x0, const OptimizerConfig& cfg,
                               ThreadPool* pool, std::uint64_t seed) {
    const auto t_start = std::chrono::steady_clock::now();
    const std::size_t n = x0.size();
    LbfgsDriver driver(f, cfg, pool);

    OptimizationRun run;
    run.x0.assign(x0.begin(), x0.end());
    run.seed = seed;

    std::vector<double> x(x0.begin(), x0.end());
    FusedEval cur = driver.evaluate(x);

    run.x_final = x;
    run.best_value = cur.value;
    run.objective_trace.push_back({driver.evaluations(), cur.value});
    auto note_best = [&](std::span<const double> point, double value) {
        if (value > run.best_value) {
            run.best_value = value;
            run.x_final.assign(point.begin(), point.end());
            run.objective_trace.push_back({driver.evaluations(), value});
        }
    };

    // Work on phi = -f; s/y pairs for the inverse-Hessian model.
    std::deque<std::vector<double>> hist_s, hist_y;
    std::deque<double> hist_rho;

    const double c1 = 1e-4, c2 = 0.9;
    const int max_line_search = 20;
    bool line_search_failed = false;

    while (true) {
        run.gradient_norm_final = max_abs(cur.grad);
        if (run.gradient_norm_final <= cfg.grad_tolerance) {
            run.converged = true;
            break;
        }
        if (driver.evaluations() + static_cast<std::int64_t>(2 * n + 1) > cfg.max_evaluations ||
            line_search_failed)
            break;

        // Two-loop recursion applied to -grad(phi) = grad(f); linearity makes
        // the result -H*grad(phi), the model ascent direction on f.
        std::vector<double> d(cur.grad.begin(), cur.grad.end());
        std::vector<double> alpha_hist(hist_s.size());
        for (std::size_t k = hist_s.size(); k-- > 0;) {
            alpha_hist[k] = hist_rho[k] * dot(hist_s[k], d);
            for (std::size_t i = 0; i < n; ++i) d[i] -= alpha_hist[k] * hist_y[k][i];
        }
        if (!hist_s.empty()) {
            const auto& s = hist_s.back();
            const auto& y = hist_y.back();
            const double scale = dot(s, y) / dot(y, y);
            for (auto& di : d) di *= scale;
        }
        for (std::size_t k = 0; k < hist_s.size(); ++k) {
            const double beta = hist_rho[k] * dot(hist_y[k], d);
            for (std::size_t i = 0; i < n; ++i) d[i] += hist_s[k][i] * (alpha_hist[k] - beta);
        }

        // Directional derivative of phi along d; fall back to steepest
        // descent if the model direction is not a descent direction.
        double dphi0 = dot(d, cur.grad) * -1.0;
        if (!(dphi0 < 0.0)) {
            hist_s.clear();
            hist_y.clear();
            hist_rho.clear();
            for (std::size_t i = 0; i < n; ++i) d[i] = cur.grad[i];
            dphi0 = -dot(cur.grad, cur.grad);
            if (!(dphi0 < 0.0)) {
                run.converged = true;  // zero gradient to machine precision
                break;
            }
        }

        const double phi0 = -cur.value;
        double alpha = hist_s.empty() ? std::min(1.0, 1.0 / std::max(1e-12, max_abs(d))) : 1.0;

        // Strong-Wolfe search: bracket then zoom, with fused evaluations
        // providing phi and phi' at each trial.
        double alpha_lo = 0.0, alpha_hi = 0.0;
        double phi_lo = phi0, dphi_lo = dphi0;
        double alpha_prev = 0.0, phi_prev = phi0, dphi_prev = dphi0;
        FusedEval trial;
        std::vector<double> xt(n);
        bool accepted = false, bracketed = false;

        auto eval_trial = [&](double a) {
            for (std::size_t i = 0; i < n; ++i) xt[i] = x[i] + a * d[i];
            trial = driver.evaluate(xt);
            note_best(xt, trial.value);
        };

        for (int ls = 0; ls < max_line_search; ++ls) {
            if (driver.evaluations() + static_cast<std::int64_t>(2 * n + 1) > cfg.max_evaluations) break;
            eval_trial(alpha);
            const double phi_a = -trial.value;
            const double dphi_a = -dot(trial.grad, d);
            if (phi_a > phi0 + c1 * alpha * dphi0 || (ls > 0 && phi_a >= phi_prev)) {
                alpha_lo = alpha_prev;
                phi_lo = phi_prev;
                dphi_lo = dphi_prev;
                alpha_hi = alpha;
                bracketed = true;
                break;
            }
            if (std::abs(dphi_a) <= -c2 * dphi0) {
                accepted = true;
                break;
            }
            if (dphi_a >= 0.0) {
                alpha_lo = alpha;
                phi_lo = phi_a;
                dphi_lo = dphi_a;
                alpha_hi = alpha_prev;
                bracketed = true;
                break;
            }
            alpha_prev = alpha;
            phi_prev = phi_a;
            dphi_prev = dphi_a;
            alpha *= 2.0;
        }

        if (bracketed && !accepted) {
            for (int z = 0; z < max_line_search; ++z) {
                if (driver.evaluations() + static_cast<std::int64_t>(2 * n + 1) > cfg.max_evaluations) break;
                // Bisection keeps every step strictly inside the bracket.
                alpha = alpha_lo + 0.5 * (alpha_hi - alpha_lo);
                eval_trial(alpha);
                const double phi_a = -trial.value;
                const double dphi_a = -dot(trial.grad, d);
                if (phi_a > phi0 + c1 * alpha * dphi0 || phi_a >= phi_lo) {
                    alpha_hi = alpha;
                } else {
                    if (std::abs(dphi_a) <= -c2 * dphi0) {
                        accepted = true;
                        break;
                    }
                    if (dphi_a * (alpha_hi - alpha_lo) >= 0.0) alpha_hi = alpha_lo;
                    alpha_lo = alpha;
                    phi_lo = phi_a;
                    dphi_lo = dphi_a;
                }
                if (std::abs(alpha_hi - alpha_lo) < 1e-14 * std::max(1.0, std::abs(alpha_lo))) break;
            }
            // A bracket collapsed without satisfying curvature: take the low
            // point if it improves, otherwise give up on this direction.
            if (!accepted && phi_lo < phi0 && alpha_lo > 0.0) {
                alpha = alpha_lo;
                eval_trial(alpha);
                accepted = -trial.value < phi0;
            }
        }

        if (!accepted) {
            line_search_failed = true;
            continue;
        }

        // Curvature update with the accepted step.
        std::vector<double> s(n), y(n);
        for (std::size_t i = 0; i < n; ++i) {
            s[i] = xt[i] - x[i];
            y[i] = cur.grad[i] - trial.grad[i];  // grad(phi) difference
        }
        const double sy = dot(s, y);
        if (sy > 1e-12 * std::sqrt(dot(s, s)) * std::sqrt(dot(y, y))) {
            hist_s.push_back(std::move(s));
            hist_y.push_back(std::move(y));
            hist_rho.push_back(1.0 / sy);
            if (static_cast<int>(hist_s.size()) > cfg.memory) {
                hist_s.pop_front();
                hist_y.pop_front();
                hist_rho.pop_front();
            }
        }
        x = xt;
        cur = trial;
    }

    run.evaluations = driver.evaluations();
    run.wall_time_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t_start).count();
    return run;
}

MultistartResult multistart(const Objective& f, const InitialPointSampler& sampler, int restarts,
                            std::uint64_t seed, const OptimizerConfig& cfg, ThreadPool* pool) {
    if (restarts < 1) throw std::invalid_argument("multistart: need at least one restart");
    MultistartResult result;
    result.runs.resize(static_cast<std::size_t>(restarts));
    auto one_run = [&](std::size_t k) {
        const std::uint64_t run_seed = derive_seed(seed, k);
        const std::vector<double> x0 = sampler(run_seed);
        result.runs[k] = lbfgs_maximize(f, x0, cfg, pool, run_seed);
    };
    if (pool) {
        pool->parallel_for(static_cast<std::size_t>(restarts), one_run);
    } else {
        for (int k = 0; k < restarts; ++k) one_run(static_cast<std::size_t>(k));
    }
    std::size_t best = 0;
    for (std::size_t k = 1; k < result.runs.size(); ++k) {
        if (result.runs[k].best_value > result.runs[best].best_value) best = k;
    }
    result.best = result.runs[best];
    return result;
}

std::pair<double, double> init_qaoa_informed(std::uint64_t seed) {
    Rng rng(derive_seed(seed, tag_hash("qaoa-informed-init")));
    return {rng.uniform(0.0, kPi / 4.0), rng.uniform(0.0, kPi / 4.0)};
}

AngleAssignment init_random(Variant variant, const Graph& g, std::uint64_t seed, int depth) {
    Rng rng(derive_seed(seed, tag_hash("random-init")));
    AngleAssignment a(variant, g.vertex_count(), g.edge_count(), depth);
    for (int l = 0; l < depth; ++l) {
        const int gcount = variant == Variant::Qaoa ? 1 : g.edge_count();
        for (int e = 0; e < gcount; ++e) a.set_gamma(l, e, rng.uniform(0.0, kTwoPi));
        switch (variant) {
            case Variant::Qaoa:
                a.set_beta(l, 0, rng.uniform(0.0, kPi));
                break;
            case Variant::Ma:
            case Variant::XeqY:
                for (int v = 0; v < g.vertex_count(); ++v) a.set_beta(l, v, rng.uniform(0.0, kPi));
                break;
            case Variant::Xy:
                for (int v = 0; v < g.vertex_count(); ++v) a.set_beta(l, v, rng.uniform(0.0, kPi));
                for (int v = 0; v < g.vertex_count(); ++v) a.set_alpha(l, v, rng.uniform(0.0, kPi));
                break;
            case Variant::YOnly:
                for (int v = 0; v < g.vertex_count(); ++v) a.set_alpha(l, v, rng.uniform(0.0, kPi));
                break;
        }
    }
    return a;
}

OptimizationRun powell_maximize(const Objective& f, std::span<const double> x0, const OptimizerConfig& cfg,
                                std::uint64_t seed) {
    const auto t_start = std::chrono::steady_clock::now();
    const std::size_t n = x0.size();
    OptimizationRun run;
    run.x0.assign(x0.begin(), x0.end());
    run.seed = seed;

    std::int64_t evals = 0;
    auto value_at = [&](std::span<const double> x) {
        ++evals;
        return f(x);
    };

    std::vector<double> x(x0.begin(), x0.end());
    double fx = value_at(x);
    run.best_value = fx;
    run.x_final = x;
    run.objective_trace.push_back({evals, fx});

    // Direction set starts as the coordinate axes.
    std::vector<std::vector<double>> dirs(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) dirs[i][i] = 1.0;

    std::vector<double> xt(n);
    auto line_max = [&](std::vector<double>& base, const std::vector<double>& dir, double fbase) {
        // Bracket by doubling, then golden-section.
        const double invphi = 0.61803398874989484820;
        double step = 0.25;
        double f0 = fbase;
        double a = 0.0, b = 0.0;
        auto probe = [&](double t) {
            for (std::size_t i = 0; i < n; ++i) xt[i] = base[i] + t * dir[i];
            return value_at(xt);
        };
        double fp = probe(step);
        double fm = probe(-step);
        double lo, hi;
        if (fp < f0 && fm < f0) {
            lo = -step;
            hi = step;
        } else {
            double dsign = fp >= fm ? 1.0 : -1.0;
            double t1 = 0.0, f1 = f0, t2 = dsign * step, f2 = std::max(fp, fm);
            double t3 = 2.0 * t2;
            double f3 = probe(t3);
            int guard = 0;
            while (f3 > f2 && guard++ < 24) {
                t1 = t2;
                f1 = f2;
                t2 = t3;
                f2 = f3;
                t3 *= 2.0;
                f3 = probe(t3);
            }
            (void)f1;
            lo = std::min(t1, t3);
            hi = std::max(t1, t3);
        }
        a = hi - invphi * (hi - lo);
        b = lo + invphi * (hi - lo);
        double fa = probe(a), fb = probe(b);
        for (int it = 0; it < 40 && evals < cfg.max_evaluations; ++it) {
            if (fa > fb) {
                hi = b;
                b = a;
                fb = fa;
                a = hi - invphi * (hi - lo);
                fa = probe(a);
            } else {
                lo = a;
                a = b;
                fa = fb;
                b = lo + invphi * (hi - lo);
                fb = probe(b);
            }
        }
        const double t_best = fa > fb ? a : b;
        const double f_best = std::max(fa, fb);
        if (f_best > fbase) {
            for (std::size_t i = 0; i < n; ++i) base[i] += t_best * dir[i];
            return f_best;
        }
        return fbase;
    };

    const int max_sweeps = 60;
    for (int sweep = 0; sweep < max_sweeps && evals < cfg.max_evaluations; ++sweep) {
        const std::vector<double> x_before = x;
        const double f_before = fx;
        std::size_t biggest = 0;
        double biggest_gain = 0.0;
        for (std::size_t i = 0; i < n && evals < cfg.max_evaluations; ++i) {
            const double f_old = fx;
            fx = line_max(x, dirs[i], fx);
            if (fx - f_old > biggest_gain) {
                biggest_gain = fx - f_old;
                biggest = i;
            }
        }
        if (fx > run.best_value) {
            run.best_value = fx;
            run.x_final = x;
            run.objective_trace.push_back({evals, fx});
        }
        if (fx - f_before < 1e-10 * (std::abs(fx) + 1e-12)) {
            run.converged = true;
            break;
        }
        // Replace the dominant direction with the sweep displacement.
        std::vector<double> disp(n);
        double norm = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            disp[i] = x[i] - x_before[i];
            norm += disp[i] * disp[i];
        }
        if (norm > 0.0) {
            dirs[biggest] = dirs.back();
            dirs.back() = disp;
            fx = line_max(x, dirs.back(), fx);
        }
    }

    if (fx > run.best_value) {
        run.best_value = fx;
        run.x_final = x;
        run.objective_trace.push_back({evals, fx});
    }
    run.evaluations = evals;
    run.wall_time_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t_start).count();
    return run;
}

}  // namespace cutq
