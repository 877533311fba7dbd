#include "qwsearch/gf.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace qws {

namespace {

// Fields are sized for exhaustive square tables and modulus searches, not
// cryptographic work.
constexpr std::int64_t kMaxOrder = std::int64_t{1} << 20;
constexpr int kMaxDegree = 21;

// Dense coefficient vectors, least-significant degree first, reduced mod p.
using Poly = std::vector<std::int64_t>;

int poly_degree(const Poly& f) {
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
        if (f[i] != 0) return i;
    return -1;
}

// Remainder of f modulo a monic polynomial g.
Poly poly_rem(Poly f, const Poly& g, std::int64_t p) {
    const int dg = poly_degree(g);
    for (int df = poly_degree(f); df >= dg; df = poly_degree(f)) {
        const std::int64_t c = f[df];
        for (int i = 0; i <= dg; ++i)
            f[df - dg + i] = ((f[df - dg + i] - c * g[i]) % p + p) % p;
    }
    return f;
}

// Monic polynomial of the given degree whose non-leading coefficients are
// the base-p digits of enc.
Poly monic_from_encoding(int degree, std::int64_t enc, std::int64_t p) {
    Poly f(static_cast<std::size_t>(degree) + 1, 0);
    for (int i = 0; i < degree; ++i) {
        f[i] = enc % p;
        enc /= p;
    }
    f[degree] = 1;
    return f;
}

std::int64_t ipow(std::int64_t base, int exp) {
    std::int64_t r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

// Trial division by every monic polynomial of degree 1..m/2. Degree-1
// trials are exactly the root check; higher degrees complete the
// factor-free check needed from m = 4 on.
bool is_irreducible(const Poly& f, std::int64_t p) {
    const int m = poly_degree(f);
    for (int d = 1; d <= m / 2; ++d) {
        const std::int64_t count = ipow(p, d);
        for (std::int64_t enc = 0; enc < count; ++enc) {
            const Poly g = monic_from_encoding(d, enc, p);
            if (poly_degree(poly_rem(f, g, p)) < 0) return false;
        }
    }
    return true;
}

}  // namespace

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

bool is_prime_power(std::int64_t q, std::int64_t* p_out, int* m_out) {
    if (q < 2) return false;
    std::int64_t p = q;
    for (std::int64_t d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    int m = 0;
    std::int64_t r = q;
    while (r % p == 0) {
        r /= p;
        ++m;
    }
    if (r != 1) return false;
    if (p_out) *p_out = p;
    if (m_out) *m_out = m;
    return true;
}

GaloisField::GaloisField(std::int64_t p, int m) : p_(p), m_(m) {
    if (!is_prime(p))
        throw std::invalid_argument("GaloisField: characteristic " + std::to_string(p) +
                                    " is not prime");
    if (m < 1 || m >= kMaxDegree)
        throw std::invalid_argument("GaloisField: unsupported extension degree " +
                                    std::to_string(m));
    q_ = 1;
    for (int i = 0; i < m; ++i) {
        q_ *= p;
        if (q_ > kMaxOrder)
            throw std::invalid_argument("GaloisField: order p^m exceeds supported bound");
    }

    for (std::int64_t enc = 0; enc < q_; ++enc) {
        Poly f = monic_from_encoding(m_, enc, p_);
        if (is_irreducible(f, p_)) {
            modulus_.assign(f.begin(), f.end() - 1);
            break;
        }
    }
    if (modulus_.empty() && m_ > 0)
        throw std::logic_error("GaloisField: no irreducible modulus found");

    square_.assign(static_cast<std::size_t>(q_), false);
    for (std::int64_t i = 1; i < q_; ++i) {
        const FieldElement s = mul(element(i), element(i));
        if (!square_[static_cast<std::size_t>(s.index)]) {
            square_[static_cast<std::size_t>(s.index)] = true;
            ++square_count_;
        }
    }
}

GaloisField GaloisField::of_order(std::int64_t q) {
    std::int64_t p = 0;
    int m = 0;
    if (!is_prime_power(q, &p, &m))
        throw std::invalid_argument("GaloisField: " + std::to_string(q) +
                                    " is not a prime power");
    return GaloisField(p, m);
}

void GaloisField::require_element(FieldElement a) const {
    if (a.index < 0 || a.index >= q_)
        throw std::invalid_argument("GaloisField: element index " + std::to_string(a.index) +
                                    " outside field of order " + std::to_string(q_));
}

FieldElement GaloisField::element(std::int64_t index) const {
    FieldElement e{index};
    require_element(e);
    return e;
}

FieldElement GaloisField::from_coeffs(std::span<const std::int64_t> coeffs) const {
    if (static_cast<int>(coeffs.size()) != m_)
        throw std::invalid_argument("GaloisField: coefficient vector has wrong length");
    std::int64_t enc = 0;
    std::int64_t w = 1;
    for (int i = 0; i < m_; ++i) {
        const std::int64_t c = ((coeffs[static_cast<std::size_t>(i)] % p_) + p_) % p_;
        enc += c * w;
        w *= p_;
    }
    return {enc};
}

std::vector<std::int64_t> GaloisField::coeffs(FieldElement a) const {
    require_element(a);
    std::vector<std::int64_t> c(static_cast<std::size_t>(m_));
    std::int64_t v = a.index;
    for (int i = 0; i < m_; ++i) {
        c[static_cast<std::size_t>(i)] = v % p_;
        v /= p_;
    }
    return c;
}

FieldElement GaloisField::add(FieldElement a, FieldElement b) const {
    require_element(a);
    require_element(b);
    std::int64_t va = a.index, vb = b.index, enc = 0, w = 1;
    for (int i = 0; i < m_; ++i) {
        enc += ((va + vb) % p_) * w;
        va /= p_;
        vb /= p_;
        w *= p_;
    }
    return {enc};
}

FieldElement GaloisField::neg(FieldElement a) const {
    require_element(a);
    std::int64_t va = a.index, enc = 0, w = 1;
    for (int i = 0; i < m_; ++i) {
        enc += ((p_ - va % p_) % p_) * w;
        va /= p_;
        w *= p_;
    }
    return {enc};
}

FieldElement GaloisField::sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }

FieldElement GaloisField::mul(FieldElement a, FieldElement b) const {
    require_element(a);
    require_element(b);
    std::array<std::int64_t, kMaxDegree> da{}, db{};
    std::array<std::int64_t, 2 * kMaxDegree> prod{};
    std::int64_t va = a.index, vb = b.index;
    for (int i = 0; i < m_; ++i) {
        da[static_cast<std::size_t>(i)] = va % p_;
        db[static_cast<std::size_t>(i)] = vb % p_;
        va /= p_;
        vb /= p_;
    }
    for (int i = 0; i < m_; ++i) {
        if (da[static_cast<std::size_t>(i)] == 0) continue;
        for (int j = 0; j < m_; ++j)
            prod[static_cast<std::size_t>(i + j)] =
                (prod[static_cast<std::size_t>(i + j)] +
                 da[static_cast<std::size_t>(i)] * db[static_cast<std::size_t>(j)]) %
                p_;
    }
    // reduce with x^m == -(c_0 + c_1 x + ... + c_{m-1} x^{m-1})
    for (int d = 2 * m_ - 2; d >= m_; --d) {
        const std::int64_t c = prod[static_cast<std::size_t>(d)];
        if (c == 0) continue;
        prod[static_cast<std::size_t>(d)] = 0;
        for (int i = 0; i < m_; ++i) {
            std::int64_t& slot = prod[static_cast<std::size_t>(d - m_ + i)];
            slot = ((slot - c * modulus_[static_cast<std::size_t>(i)]) % p_ + p_) % p_;
        }
    }
    std::int64_t enc = 0, w = 1;
    for (int i = 0; i < m_; ++i) {
        enc += prod[static_cast<std::size_t>(i)] * w;
        w *= p_;
    }
    return {enc};
}

FieldElement GaloisField::pow(FieldElement a, std::int64_t e) const {
    require_element(a);
    if (e < 0) throw std::invalid_argument("GaloisField: negative exponent");
    FieldElement r = one();
    FieldElement base = a;
    while (e > 0) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

FieldElement GaloisField::inv(FieldElement a) const {
    require_element(a);
    if (a.index == 0)
        throw std::domain_error("GaloisField: the zero element has no multiplicative inverse");
    return pow(a, q_ - 2);
}

bool GaloisField::is_nonzero_square(FieldElement a) const {
    require_element(a);
    if (a.index == 0)
        throw std::domain_error("GaloisField: square test is defined for nonzero elements only");
    return square_[static_cast<std::size_t>(a.index)];
}

}  // namespace qws
