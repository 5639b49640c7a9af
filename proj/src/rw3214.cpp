#include "levysb/rw3214.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "levysb/errors.hpp"

namespace levysb {

namespace {

std::vector<std::size_t> effective_perm(const Walk& w) {
    if (!w.perm.empty()) {
        if (w.perm.size() != w.increments.size())
            throw MismatchedLengths("permutation size mismatch");
        return w.perm;
    }
    std::vector<std::size_t> id(w.increments.size());
    std::iota(id.begin(), id.end(), std::size_t{0});
    return id;
}

double canonical_sum(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    double s = 0.0;
    for (double v : values) s += v;
    return s;
}

}  // namespace

PwlPath walk_path(const Walk& w) {
    const std::size_t n = w.increments.size();
    if (n == 0) throw NonPositiveLength("walk needs at least one increment");
    if (!(w.horizon > 0.0)) throw NonPositiveLength("walk horizon");
    const auto perm = effective_perm(w);
    std::vector<double> times(n + 1), values(n + 1);
    times[0] = 0.0;
    values[0] = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        times[k + 1] = w.horizon * static_cast<double>(k + 1) / static_cast<double>(n);
        values[k + 1] = values[k] + w.increments[perm[k]];
    }
    times[n] = w.horizon;
    return PwlPath(std::move(times), std::move(values));
}

PwlPath transform_3214(const PwlPath& f, double g, double u, double d) {
    const double T = f.horizon();
    if (!(0.0 <= g && g <= u && u <= d && d <= T)) throw BadCutPoints();
    const double fg = f.evaluate(g);
    const double fu = f.evaluate(u);
    const double fd = f.evaluate(d);

    std::vector<double> times{0.0}, values{0.0};
    auto append = [&](double t, double v) {
        if (t <= times.back()) return;  // junction duplicates
        times.push_back(t);
        values.push_back(v);
    };

    const auto& st = f.times();
    const auto& sv = f.values();
    // (III) [u,d] -> [0, d-u]
    for (std::size_t i = 0; i < st.size(); ++i)
        if (st[i] > u && st[i] < d) append(st[i] - u, sv[i] - fu);
    append(d - u, fd - fu);
    // (II) [g,u] -> [d-u, d-g]
    for (std::size_t i = 0; i < st.size(); ++i)
        if (st[i] > g && st[i] < u) append(d - u + (st[i] - g), fd - fu + sv[i] - fg);
    append(d - g, fd - fg);
    // (I) [0,g] -> [d-g, d]
    for (std::size_t i = 0; i < st.size(); ++i)
        if (st[i] > 0.0 && st[i] < g) append(d - g + st[i], fd - fg + sv[i]);
    append(d, fd);
    // (IV) [d,T] unchanged
    for (std::size_t i = 0; i < st.size(); ++i)
        if (st[i] > d) append(st[i], sv[i]);
    if (times.back() < T) append(T, f.evaluate(T));
    return PwlPath(std::move(times), std::move(values));
}

std::size_t cyclic_shift_above_chord(std::span<const double> x) {
    const std::size_t n = x.size();
    if (n == 0) throw NonPositiveLength("empty increment sequence");
    if (n <= 20 && !has_no_subset_mean_ties(x))
        throw TieDetected("two subsets share a mean");
    double total = 0.0;
    for (double v : x) total += v;
    const double mean = total / static_cast<double>(n);
    double scale = 1.0;
    for (double v : x) scale = std::max(scale, std::abs(v));
    // The rotation point is the argmin of the centred walk; the final
    // centred value is 0, so an argmin at n is the already-above case.
    std::vector<double> centred(n);
    double running = 0.0;
    double best = std::numeric_limits<double>::infinity();
    std::size_t best_k = 0;
    for (std::size_t k = 1; k <= n; ++k) {
        running += x[k - 1] - mean;
        centred[k - 1] = running;
        if (running < best) {
            best = running;
            best_k = k;
        }
    }
    double second = std::numeric_limits<double>::infinity();
    for (std::size_t k = 1; k <= n; ++k)
        if (k != best_k) second = std::min(second, centred[k - 1]);
    if (n > 1 && second - best <= 1e-12 * scale)
        throw TieDetected("two rotations qualify within tolerance");
    return best_k;
}

bool has_no_subset_mean_ties(std::span<const double> x, double tol) {
    const std::size_t n = x.size();
    if (n > 20) return true;  // trusted
    struct Entry {
        double mean;
        std::uint32_t mask;
    };
    std::vector<Entry> entries;
    entries.reserve((std::size_t{1} << n) - 1);
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
        double sum = 0.0;
        int bits = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1u << i)) {
                sum += x[i];
                ++bits;
            }
        entries.push_back({sum / bits, mask});
    }
    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) { return a.mean < b.mean; });
    for (std::size_t i = 1; i < entries.size(); ++i) {
        if (entries[i].mask == entries[i - 1].mask) continue;
        if (std::abs(entries[i].mean - entries[i - 1].mean) <= tol) return false;
    }
    return true;
}

Inverted3214 invert_3214(const PwlPath& tf, double d_minus_g) {
    const double T = tf.horizon();
    if (!(d_minus_g >= 0.0 && d_minus_g <= T))
        throw NotInvertible("d-g outside [0, T]");
    if (d_minus_g == 0.0) return {0.0, 0.0, 0.0, tf};

    const double chord_slope = tf.evaluate(d_minus_g) / d_minus_g;
    const auto& ts = tf.times();
    const auto& vs = tf.values();

    // d-u: argmin of the chord-centred values over the vertices in (0, d-g].
    double best = 0.0, second = std::numeric_limits<double>::infinity();
    double d_minus_u = d_minus_g;  // argmin at the right endpoint means u == d... see below
    bool found = false;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        if (!(ts[i] > 0.0 && ts[i] <= d_minus_g)) continue;
        const double centred = vs[i] - chord_slope * ts[i];
        if (!found || centred < best) {
            second = found ? best : second;
            best = centred;
            d_minus_u = ts[i];
            found = true;
        } else {
            second = std::min(second, centred);
        }
    }
    if (!found) throw NotInvertible("no vertex in (0, d-g]");
    if (std::isfinite(second) && std::abs(second - best) <= 1e-12)
        throw NotInvertible("rotation tie");
    // The centred value at d-g itself is 0; the unique argmin lands there
    // exactly when the stretch [0, d-g] is already above its chord (u == d).
    if (d_minus_u == d_minus_g && best >= 0.0) d_minus_u = 0.0;

    // d: right end of the last minorant face of tf on [d-g, T] with slope
    // below the chord slope.
    std::vector<double> subt, subv;
    for (std::size_t i = 0; i < ts.size(); ++i)
        if (ts[i] >= d_minus_g) {
            subt.push_back(ts[i] - d_minus_g);
            subv.push_back(vs[i] - tf.evaluate(d_minus_g));
        }
    if (subt.empty() || subt.front() != 0.0) {
        subt.insert(subt.begin(), 0.0);
        subv.insert(subv.begin(), 0.0);
    }
    double d = d_minus_g;
    if (subt.size() >= 2) {
        const auto hull = lower_hull_indices(subt, subv);
        for (std::size_t k = 1; k < hull.size(); ++k) {
            const double len = subt[hull[k]] - subt[hull[k - 1]];
            const double hgt = subv[hull[k]] - subv[hull[k - 1]];
            if (hgt / len < chord_slope) d = d_minus_g + subt[hull[k]];
        }
    }
    const double g = d - d_minus_g;
    const double u = d - d_minus_u;

    const double tfd = tf.evaluate(d);
    const double tf_dg = tf.evaluate(d_minus_g);
    const double tf_du = tf.evaluate(d_minus_u);
    // Undo the rearrangement segment by segment.
    std::vector<double> times{0.0}, values{0.0};
    auto append = [&](double t, double v) {
        if (t <= times.back()) return;
        times.push_back(t);
        values.push_back(v);
    };
    // f on (0, g]: f(s) = tf(s + (d-g)) - tf(d-g)
    for (std::size_t i = 0; i < ts.size(); ++i)
        if (ts[i] > d_minus_g && ts[i] < d) append(ts[i] - d_minus_g, vs[i] - tf_dg);
    if (g > 0.0) append(g, tfd - tf_dg);
    // f on (g, u]: f(s) = tf((d-u) + (s-g)) + tf(d) - tf(d-u) - tf(d-g)
    for (std::size_t i = 0; i < ts.size(); ++i)
        if (ts[i] > d_minus_u && ts[i] < d_minus_g)
            append(g + (ts[i] - d_minus_u), vs[i] + tfd - tf_du - tf_dg);
    if (u > g) append(u, tfd - tf_du);
    // f on (u, d]: f(s) = tf(s - u) + tf(d) - tf(d-u)
    for (std::size_t i = 0; i < ts.size(); ++i)
        if (ts[i] > 0.0 && ts[i] < d_minus_u) append(u + ts[i], vs[i] + tfd - tf_du);
    if (d > u) append(d, tfd);
    // f on (d, T]
    for (std::size_t i = 0; i < ts.size(); ++i)
        if (ts[i] > d) append(ts[i], vs[i]);
    if (times.back() < T) append(T, tf.evaluate(T));
    return {g, u, d, PwlPath(std::move(times), std::move(values))};
}

std::vector<Face> sample_discrete_sb_faces(std::span<const double> x,
                                           double horizon, RngStream& rng) {
    const std::size_t n = x.size();
    if (n == 0) throw NonPositiveLength("empty increment sequence");
    if (!(horizon > 0.0)) throw NonPositiveLength("horizon");
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    for (std::size_t i = n; i > 1; --i) {
        const auto j = static_cast<std::size_t>(rng.uniform() * static_cast<double>(i));
        std::swap(perm[i - 1], perm[std::min(j, i - 1)]);
    }
    std::vector<double> prefix(n + 1, 0.0);
    for (std::size_t k = 0; k < n; ++k) prefix[k + 1] = prefix[k] + x[perm[k]];
    const double cell = horizon / static_cast<double>(n);
    std::vector<Face> faces;
    std::size_t m = n;
    while (m > 0) {
        const auto next = static_cast<std::size_t>(
            std::floor(static_cast<double>(m) * rng.uniform()));
        faces.push_back(Face{static_cast<double>(m - next) * cell,
                             prefix[m] - prefix[next]});
        m = next;
    }
    return faces;
}

namespace {

struct RawFace {
    std::int64_t cells = 0;
    std::vector<double> values;  // the increments spanned by this face

    double height() const {
        double s = 0.0;
        for (double v : values) s += v;
        return s;
    }
};

FaceKey canonical_key(std::vector<RawFace> faces, double cell_width,
                      double slope_tol = 1e-9) {
    for (auto& f : faces) std::sort(f.values.begin(), f.values.end());
    auto slope_of = [cell_width](const RawFace& f) {
        return canonical_sum(f.values) / (static_cast<double>(f.cells) * cell_width);
    };
    std::sort(faces.begin(), faces.end(), [&](const RawFace& a, const RawFace& b) {
        const double sa = slope_of(a), sb = slope_of(b);
        if (sa != sb) return sa < sb;
        return a.cells < b.cells;
    });
    std::vector<RawFace> merged;
    for (auto& f : faces) {
        if (!merged.empty() &&
            std::abs(slope_of(merged.back()) - slope_of(f)) <= slope_tol) {
            merged.back().cells += f.cells;
            merged.back().values.insert(merged.back().values.end(),
                                        f.values.begin(), f.values.end());
        } else {
            merged.push_back(std::move(f));
        }
    }
    FaceKey key;
    key.reserve(merged.size());
    for (auto& f : merged) key.emplace_back(f.cells, canonical_sum(f.values));
    return key;
}

long long factorial(std::size_t n) {
    long long f = 1;
    for (std::size_t k = 2; k <= n; ++k) f *= static_cast<long long>(k);
    return f;
}

}  // namespace

FaceDistribution enumerate_minorant_distribution(std::span<const double> x,
                                                 double horizon) {
    const std::size_t n = x.size();
    if (n == 0) throw NonPositiveLength("empty increment sequence");
    if (n > 8) throw TooLarge("minorant enumeration capped at n = 8");
    const double cell = horizon / static_cast<double>(n);
    FaceDistribution dist;
    dist.horizon = horizon;
    dist.n = n;
    const Rational weight(1, factorial(n));
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::vector<double> grid(n + 1), prefix(n + 1);
    for (std::size_t k = 0; k <= n; ++k) grid[k] = static_cast<double>(k);
    do {
        prefix[0] = 0.0;
        for (std::size_t k = 0; k < n; ++k) prefix[k + 1] = prefix[k] + x[perm[k]];
        const auto hull = lower_hull_indices(grid, prefix);
        std::vector<RawFace> faces;
        faces.reserve(hull.size() - 1);
        for (std::size_t k = 1; k < hull.size(); ++k) {
            RawFace f;
            f.cells = static_cast<std::int64_t>(hull[k] - hull[k - 1]);
            for (std::size_t pos = hull[k - 1]; pos < hull[k]; ++pos)
                f.values.push_back(x[perm[pos]]);
            faces.push_back(std::move(f));
        }
        dist.probabilities[canonical_key(std::move(faces), cell)] += weight;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return dist;
}

FaceDistribution enumerate_sb_distribution(std::span<const double> x,
                                           double horizon) {
    const std::size_t n = x.size();
    if (n == 0) throw NonPositiveLength("empty increment sequence");
    if (n > 6) throw TooLarge("stick-breaking enumeration capped at n = 6");
    const double cell = horizon / static_cast<double>(n);
    FaceDistribution dist;
    dist.horizon = horizon;
    dist.n = n;
    const Rational perm_weight(1, factorial(n));
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    do {
        // Chains n = m_0 > m_1 > ... > 0; each step picks the next remainder
        // uniformly among the m cells below the current one.
        std::vector<RawFace> faces;
        auto recurse = [&](auto&& self, std::size_t m, Rational prob) -> void {
            if (m == 0) {
                dist.probabilities[canonical_key(faces, cell)] += prob * perm_weight;
                return;
            }
            for (std::size_t next = 0; next < m; ++next) {
                RawFace f;
                f.cells = static_cast<std::int64_t>(m - next);
                for (std::size_t pos = next; pos < m; ++pos)
                    f.values.push_back(x[perm[pos]]);
                faces.push_back(std::move(f));
                self(self, next, prob / static_cast<long long>(m));
                faces.pop_back();
            }
        };
        recurse(recurse, n, Rational(1));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return dist;
}

double total_variation(const FaceDistribution& a, const FaceDistribution& b,
                       double tol) {
    // Collect signed masses, cluster keys whose faces all agree within tol.
    std::vector<std::pair<FaceKey, Rational>> rows;
    for (const auto& [k, p] : a.probabilities) rows.emplace_back(k, p);
    for (const auto& [k, p] : b.probabilities) rows.emplace_back(k, -p);
    std::sort(rows.begin(), rows.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    auto keys_close = [tol](const FaceKey& x, const FaceKey& y) {
        if (x.size() != y.size()) return false;
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (x[i].first != y[i].first) return false;
            if (std::abs(x[i].second - y[i].second) > tol) return false;
        }
        return true;
    };
    double tv = 0.0;
    std::size_t i = 0;
    while (i < rows.size()) {
        Rational mass = rows[i].second;
        std::size_t j = i + 1;
        while (j < rows.size() && keys_close(rows[j - 1].first, rows[j].first)) {
            mass += rows[j].second;
            ++j;
        }
        tv += std::abs(boost::rational_cast<double>(mass));
        i = j;
    }
    return tv / 2.0;
}

double transform_law_gap(std::span<const double> x, double horizon) {
    const std::size_t n = x.size();
    if (n == 0) throw NonPositiveLength("empty increment sequence");
    if (n > 8) throw TooLarge("law comparison capped at n = 8");
    using Outcome = std::pair<std::int64_t, std::vector<double>>;
    std::vector<Outcome> lhs, rhs;
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::vector<double> grid(n + 1), prefix(n + 1);
    for (std::size_t k = 0; k <= n; ++k) grid[k] = static_cast<double>(k);
    do {
        prefix[0] = 0.0;
        for (std::size_t k = 0; k < n; ++k) prefix[k + 1] = prefix[k] + x[perm[k]];
        const auto hull = lower_hull_indices(grid, prefix);
        for (std::size_t m = 1; m <= n; ++m) {
            lhs.emplace_back(static_cast<std::int64_t>(m), prefix);
            // Face of the minorant containing the grid cell (m-1, m].
            std::size_t j = 1;
            while (!(hull[j - 1] <= m - 1 && m <= hull[j])) ++j;
            const std::size_t gg = hull[j - 1], dd = hull[j], uu = m;
            std::vector<double> tv(n + 1, 0.0);
            const double Sg = prefix[gg], Su = prefix[uu], Sd = prefix[dd];
            for (std::size_t t = 0; t <= dd - uu; ++t) tv[t] = prefix[uu + t] - Su;
            for (std::size_t t = dd - uu + 1; t <= dd - gg; ++t)
                tv[t] = Sd - Su + prefix[gg + t - (dd - uu)] - Sg;
            for (std::size_t t = dd - gg + 1; t <= dd; ++t)
                tv[t] = Sd - Sg + prefix[t - (dd - gg)];
            for (std::size_t t = dd + 1; t <= n; ++t) tv[t] = prefix[t];
            rhs.emplace_back(static_cast<std::int64_t>(dd - gg), std::move(tv));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    // Outcomes only differ by rounding noise when the laws agree, so pair
    // each left outcome with its nearest unused right outcome of the same
    // integer length and report the worst matched distance.
    std::map<std::int64_t, std::pair<std::vector<const Outcome*>,
                                     std::vector<const Outcome*>>> groups;
    for (const Outcome& o : lhs) groups[o.first].first.push_back(&o);
    for (const Outcome& o : rhs) groups[o.first].second.push_back(&o);
    double gap = 0.0;
    for (auto& [cells, pair] : groups) {
        auto& [ls, rs] = pair;
        if (ls.size() != rs.size()) return 1.0;
        std::vector<bool> used(rs.size(), false);
        for (const Outcome* l : ls) {
            double best = std::numeric_limits<double>::infinity();
            std::size_t best_j = rs.size();
            for (std::size_t j = 0; j < rs.size(); ++j) {
                if (used[j]) continue;
                double dist = 0.0;
                for (std::size_t t = 0; t <= n; ++t)
                    dist = std::max(dist,
                                    std::abs(l->second[t] - rs[j]->second[t]));
                if (dist < best) {
                    best = dist;
                    best_j = j;
                }
            }
            used[best_j] = true;
            gap = std::max(gap, best);
        }
    }
    return gap;
}

}  // namespace levysb
