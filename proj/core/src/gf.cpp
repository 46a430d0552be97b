#include "evasive/gf.hpp"

#include <string>

#include "evasive/errors.hpp"

namespace evasive {

namespace {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

int ipow(int b, int e) {
    int r = 1;
    while (e--) r *= b;
    return r;
}

}  // namespace

FiniteField::FiniteField(int p, int r) : p_(p), r_(r) {
    if (!is_prime(p)) throw InputError("FiniteField: characteristic must be prime");
    if (r < 1) throw InputError("FiniteField: degree must be at least 1");
    q_ = ipow(p, r);
    if (q_ > 16) throw InputError("FiniteField: only fields with at most 16 elements supported");

    if (r == 1) {
        mod_ = {0, 1};  // x
    } else if (q_ == 4) {
        mod_ = {1, 1, 1};  // x^2+x+1
    } else if (q_ == 8) {
        mod_ = {1, 1, 0, 1};  // x^3+x+1
    } else if (q_ == 9) {
        mod_ = {1, 0, 1};  // x^2+1
    } else if (q_ == 16) {
        mod_ = {1, 1, 0, 0, 1};  // x^4+x+1
    } else {
        throw InputError("FiniteField: unsupported size " + std::to_string(q_));
    }

    auto digits = [&](int a) {
        std::vector<int> d(r_);
        for (int i = 0; i < r_; ++i, a /= p_) d[i] = a % p_;
        return d;
    };
    auto encode = [&](const std::vector<int>& d) {
        int a = 0;
        for (int i = r_ - 1; i >= 0; --i) a = a * p_ + d[i];
        return a;
    };

    add_.resize(q_ * q_);
    mul_.resize(q_ * q_);
    neg_.resize(q_);
    for (int a = 0; a < q_; ++a) {
        auto da = digits(a);
        std::vector<int> dn(r_);
        for (int i = 0; i < r_; ++i) dn[i] = (p_ - da[i]) % p_;
        neg_[a] = encode(dn);
        for (int b = 0; b < q_; ++b) {
            auto db = digits(b);
            std::vector<int> ds(r_);
            for (int i = 0; i < r_; ++i) ds[i] = (da[i] + db[i]) % p_;
            add_[a * q_ + b] = encode(ds);

            // Polynomial product reduced by the modulus.
            std::vector<int> prod(2 * r_ - 1, 0);
            for (int i = 0; i < r_; ++i)
                for (int j = 0; j < r_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
            for (int k = 2 * r_ - 2; k >= r_; --k) {
                int c = prod[k];
                if (c == 0) continue;
                prod[k] = 0;
                // x^k = x^(k-r) * (x^r mod modulus); modulus is monic.
                for (int i = 0; i < r_; ++i)
                    prod[k - r_ + i] = ((prod[k - r_ + i] - c * mod_[i]) % p_ + p_ * p_) % p_;
            }
            prod.resize(r_);
            mul_[a * q_ + b] = encode(prod);
        }
    }
}

int FiniteField::inv(int a) const {
    if (a == 0) throw InputError("FiniteField: zero has no inverse");
    for (int b = 1; b < q_; ++b)
        if (mul(a, b) == 1) return b;
    throw InputError("FiniteField: inverse not found (corrupt tables)");
}

int FiniteField::primitive_element() const {
    for (int g = 1; g < q_; ++g) {
        int x = g, ord = 1;
        while (x != 1) {
            x = mul(x, g);
            ++ord;
        }
        if (ord == q_ - 1) return g;
    }
    throw InputError("FiniteField: no primitive element (corrupt tables)");
}

Permutation FiniteField::affine_map(int a, int b) const {
    if (a == 0) throw InputError("affine_map: a must be nonzero");
    std::vector<std::uint8_t> img(q_);
    for (int x = 0; x < q_; ++x) img[x] = static_cast<std::uint8_t>(add(mul(a, x), b));
    return Permutation(std::move(img));
}

}  // namespace evasive
