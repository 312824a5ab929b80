#include "gct/polynomial.hpp"

#include <numeric>
#include <stdexcept>

namespace gct {

Polynomial Polynomial::constant(int nvars, const Rat& c) {
    Polynomial p(nvars);
    p.add_term(Exp(nvars, 0), c);
    return p;
}

Polynomial Polynomial::variable(int nvars, int i) {
    if (i < 0 || i >= nvars) throw std::out_of_range("variable index");
    Polynomial p(nvars);
    Exp e(nvars, 0);
    e[i] = 1;
    p.add_term(e, Rat(1));
    return p;
}

Polynomial Polynomial::monomial(int nvars, Exp e, const Rat& c) {
    if (static_cast<int>(e.size()) != nvars) throw std::invalid_argument("monomial arity");
    Polynomial p(nvars);
    p.add_term(std::move(e), c);
    return p;
}

Rat Polynomial::coeff(const Exp& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
}

void Polynomial::add_term(const Exp& e, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    if (nvars_ != rhs.nvars_) throw std::invalid_argument("polynomial arity mismatch");
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    if (nvars_ != rhs.nvars_) throw std::invalid_argument("polynomial arity mismatch");
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
    Polynomial out(*this);
    out += rhs;
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
    Polynomial out(*this);
    out -= rhs;
    return out;
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
    if (nvars_ != rhs.nvars_) throw std::invalid_argument("polynomial arity mismatch");
    Polynomial out(nvars_);
    Exp e(nvars_);
    for (const auto& [e1, c1] : terms_) {
        for (const auto& [e2, c2] : rhs.terms_) {
            for (int i = 0; i < nvars_; ++i) e[i] = e1[i] + e2[i];
            out.add_term(e, c1 * c2);
        }
    }
    return out;
}

Polynomial Polynomial::operator*(const Rat& c) const {
    Polynomial out(nvars_);
    if (c == 0) return out;
    for (const auto& [e, k] : terms_) out.terms_.emplace(e, k * c);
    return out;
}

Polynomial Polynomial::operator-() const { return *this * Rat(-1); }

Polynomial Polynomial::pow(int k) const {
    if (k < 0) throw std::invalid_argument("negative power");
    Polynomial out = constant(nvars_, Rat(1));
    Polynomial base(*this);
    while (k > 0) {
        if (k & 1) out = out * base;
        base = (k >>= 1) ? base * base : base;
    }
    return out;
}

int Polynomial::degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_)
        d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
    return d;
}

bool Polynomial::is_homogeneous() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
        int t = std::accumulate(e.begin(), e.end(), 0);
        if (d == -1) d = t;
        else if (t != d) return false;
    }
    return true;
}

Rat Polynomial::evaluate(const RatVec& point) const {
    if (static_cast<int>(point.size()) != nvars_)
        throw std::invalid_argument("evaluate: wrong point dimension");
    Rat total(0);
    for (const auto& [e, c] : terms_) {
        Rat m = c;
        for (int i = 0; i < nvars_; ++i)
            for (int k = 0; k < e[i]; ++k) m *= point[i];
        total += m;
    }
    return total;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
    if (static_cast<int>(images.size()) != nvars_)
        throw std::invalid_argument("substitute: wrong image count");
    int target_vars = images.empty() ? 0 : images[0].nvars();
    Polynomial out(target_vars);
    for (const auto& [e, c] : terms_) {
        Polynomial m = Polynomial::constant(target_vars, c);
        for (int i = 0; i < nvars_; ++i)
            if (e[i] > 0) m = m * images[i].pow(e[i]);
        out += m;
    }
    return out;
}

Polynomial Polynomial::derivative(int i) const {
    if (i < 0 || i >= nvars_) throw std::out_of_range("derivative index");
    Polynomial out(nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[i] == 0) continue;
        Exp d(e);
        d[i] -= 1;
        out.add_term(d, c * e[i]);
    }
    return out;
}

Polynomial Polynomial::permuted(const std::vector<int>& perm) const {
    if (static_cast<int>(perm.size()) != nvars_)
        throw std::invalid_argument("permuted: wrong permutation size");
    Polynomial out(nvars_);
    Exp e2(nvars_);
    for (const auto& [e, c] : terms_) {
        for (int i = 0; i < nvars_; ++i) e2[perm[i]] = e[i];
        out.add_term(e2, c);
    }
    return out;
}

bool Polynomial::is_symmetric() const {
    std::vector<int> perm(nvars_);
    for (int t = 0; t + 1 < nvars_; ++t) {
        for (int i = 0; i < nvars_; ++i) perm[i] = i;
        std::swap(perm[t], perm[t + 1]);
        if (!(permuted(perm) == *this)) return false;
    }
    return true;
}

Polynomial elementary_symmetric(int n, int k) {
    if (k < 0 || k > n) return Polynomial(n);
    // DP over variables: e_k(x_1..x_m) = e_k(x_1..x_{m-1}) + x_m e_{k-1}(..).
    std::vector<Polynomial> ek(k + 1, Polynomial(n));
    ek[0] = Polynomial::constant(n, Rat(1));
    for (int m = 0; m < n; ++m) {
        Polynomial xm = Polynomial::variable(n, m);
        for (int j = std::min(k, m + 1); j >= 1; --j) ek[j] += ek[j - 1] * xm;
    }
    return ek[k];
}

Polynomial power_sum(int n, int k) {
    Polynomial p(n);
    for (int i = 0; i < n; ++i) {
        Polynomial::Exp e(n, 0);
        e[i] = k;
        p.add_term(e, Rat(1));
    }
    return p;
}

}  // namespace gct
