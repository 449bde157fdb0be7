#include "crnt/elementary_modes.hpp"

#include <algorithm>
#include <stdexcept>

namespace crnt {

const char* to_string(ModeKind k) { return k == ModeKind::Cyclic ? "cyclic" : "stoichiometric"; }

namespace {

struct Ray {
    std::vector<Z> v;
    std::vector<bool> supp;
};

void normalize(std::vector<Z>& v) {
    Z g = 0;
    for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g > 1)
        for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

Ray make_ray(std::vector<Z> v) {
    normalize(v);
    Ray r;
    r.supp.resize(v.size());
    for (std::size_t j = 0; j < v.size(); ++j) r.supp[j] = sgn(v[j]) != 0;
    r.v = std::move(v);
    return r;
}

}  // namespace

ModeKind classify(const std::vector<std::int64_t>& flux, const IntMatrix& Ia) {
    if (flux.size() != Ia.cols) throw std::invalid_argument("classify: flux length mismatch");
    for (std::size_t i = 0; i < Ia.rows; ++i) {
        std::int64_t s = 0;
        for (std::size_t j = 0; j < Ia.cols; ++j) s += Ia(i, j) * flux[j];
        if (s != 0) return ModeKind::Stoichiometric;
    }
    return ModeKind::Cyclic;
}

std::vector<ElementaryMode> enumerate_modes(const Network& net) {
    std::size_t m = net.m();
    if (m == 0) return {};
    auto mats = matrices(net);
    const IntMatrix& G = mats.Gamma;

    std::vector<Ray> rays;
    for (std::size_t j = 0; j < m; ++j) {
        std::vector<Z> v(m, Z(0));
        v[j] = 1;
        rays.push_back(make_ray(std::move(v)));
    }

    for (std::size_t row = 0; row < G.rows; ++row) {
        std::vector<Z> s(rays.size());
        for (std::size_t k = 0; k < rays.size(); ++k) {
            Z acc = 0;
            for (std::size_t j = 0; j < m; ++j)
                if (G(row, j) != 0 && rays[k].supp[j]) acc += rays[k].v[j] * static_cast<long>(G(row, j));
            s[k] = acc;
        }
        std::vector<Ray> next;
        std::vector<std::size_t> pos, neg;
        for (std::size_t k = 0; k < rays.size(); ++k) {
            int sg = sgn(s[k]);
            if (sg == 0)
                next.push_back(rays[k]);
            else if (sg > 0)
                pos.push_back(k);
            else
                neg.push_back(k);
        }
        for (auto p : pos)
            for (auto q : neg) {
                std::vector<bool> uni(m);
                for (std::size_t j = 0; j < m; ++j) uni[j] = rays[p].supp[j] || rays[q].supp[j];
                bool adjacent = true;
                for (std::size_t k = 0; k < rays.size() && adjacent; ++k) {
                    if (k == p || k == q) continue;
                    bool inside = true;
                    for (std::size_t j = 0; j < m; ++j)
                        if (rays[k].supp[j] && !uni[j]) {
                            inside = false;
                            break;
                        }
                    if (inside) adjacent = false;
                }
                if (!adjacent) continue;
                std::vector<Z> v(m);
                for (std::size_t j = 0; j < m; ++j) v[j] = s[p] * rays[q].v[j] - s[q] * rays[p].v[j];
                next.push_back(make_ray(std::move(v)));
            }
        rays = std::move(next);
    }

    std::vector<ElementaryMode> modes;
    for (const auto& r : rays) {
        ElementaryMode em;
        em.flux.resize(m);
        em.unit_support = true;
        for (std::size_t j = 0; j < m; ++j) {
            if (!r.v[j].fits_slong_p()) throw std::overflow_error("elementary mode entry too large");
            em.flux[j] = r.v[j].get_si();
            if (em.flux[j] != 0) {
                em.support.push_back(j);
                if (em.flux[j] != 1) em.unit_support = false;
            }
        }
        em.kind = classify(em.flux, mats.Ia);
        modes.push_back(std::move(em));
    }
    std::sort(modes.begin(), modes.end(),
              [](const ElementaryMode& a, const ElementaryMode& b) { return a.support < b.support; });
    modes.erase(std::unique(modes.begin(), modes.end(),
                            [](const ElementaryMode& a, const ElementaryMode& b) { return a.flux == b.flux; }),
                modes.end());
    return modes;
}

}  // namespace crnt
