#include "evasive/oliver.hpp"

#include <algorithm>
#include <map>
#include <numeric>
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

bool is_prime_power_of(std::size_t m, int p) {
    while (m % p == 0) m /= p;
    return m == 1;
}

}  // namespace

bool verify_oliver_witness(const OliverWitness& w, std::size_t cap) {
    if (!is_prime(w.prime)) return false;
    const GeneratedGroup& whole = w.group;

    GeneratedGroup sub;
    if (w.normal_gens.empty()) {
        sub.degree = whole.degree;
        sub.elements = {Permutation(whole.degree)};
    } else {
        sub = group_closure(w.normal_gens, cap);
        if (sub.degree != whole.degree) return false;
    }

    for (const auto& s : sub.elements)
        if (!whole.contains(s)) return false;
    if (!is_prime_power_of(sub.order(), w.prime)) return false;

    // Normality: conjugation by the group generators maps the subgroup into
    // itself.
    for (const auto& g : whole.generators) {
        Permutation gi = g.inverse();
        for (const auto& s : sub.elements)
            if (!std::binary_search(sub.elements.begin(), sub.elements.end(), g * s * gi))
                return false;
    }

    // Quotient via coset keys (minimal element of each coset).
    auto coset_key = [&](const Permutation& e) {
        Permutation best = e * sub.elements.front();
        for (const auto& s : sub.elements) {
            Permutation c = e * s;
            if (c < best) best = c;
        }
        return best;
    };
    std::map<Permutation, int> coset_id;
    std::vector<Permutation> reps;
    for (const auto& e : whole.elements) {
        Permutation key = coset_key(e);
        if (coset_id.emplace(key, static_cast<int>(reps.size())).second) reps.push_back(key);
    }
    const int m = static_cast<int>(reps.size());

    // Cyclic iff some coset has order m in the quotient.
    for (const auto& r : reps) {
        Permutation acc = r;
        int ord = 1;
        while (coset_id.at(coset_key(acc)) != coset_id.at(coset_key(Permutation(whole.degree)))) {
            acc = acc * r;
            ++ord;
            if (ord > m) break;
        }
        if (ord == m) return true;
    }
    return m == 1;
}

OliverWitness affine_group(int p, int r) {
    FiniteField field(p, r);  // validates p prime, p^r <= 16
    int q = field.size();

    std::vector<Permutation> translations;
    int basis = 1;
    for (int i = 0; i < r; ++i, basis *= p) translations.push_back(field.affine_map(1, basis));

    std::vector<Permutation> gens = translations;
    if (q > 2) gens.push_back(field.affine_map(field.primitive_element(), 0));

    OliverWitness w;
    w.group = group_closure(gens);
    w.normal_gens = translations;
    w.prime = p;
    return w;
}

OliverWitness affine_cyclic_product(int p, int r, int t) {
    if (t < 1) throw InputError("affine_cyclic_product: t must be at least 1");
    OliverWitness base = affine_group(p, r);
    int q = base.group.degree;
    if (q + t > kMaxVertices)
        throw InputError("affine_cyclic_product: p^r + t exceeds 16 points");
    if (std::gcd(q - 1, t) != 1)
        throw InputError("affine_cyclic_product: gcd(p^r-1, t) = " +
                         std::to_string(std::gcd(q - 1, t)) +
                         " != 1, quotient would not be cyclic; witness construction refused");

    auto extend = [&](const Permutation& perm) {
        std::vector<std::uint8_t> img(q + t);
        for (int x = 0; x < q; ++x) img[x] = static_cast<std::uint8_t>(perm(x));
        for (int x = q; x < q + t; ++x) img[x] = static_cast<std::uint8_t>(x);
        return Permutation(std::move(img));
    };

    std::vector<Permutation> gens, translations;
    for (const auto& g : base.group.generators) gens.push_back(extend(g));
    for (const auto& g : base.normal_gens) translations.push_back(extend(g));
    if (t > 1) {
        std::vector<std::uint8_t> img(q + t);
        for (int x = 0; x < q; ++x) img[x] = static_cast<std::uint8_t>(x);
        for (int x = 0; x < t; ++x) img[q + x] = static_cast<std::uint8_t>(q + (x + 1) % t);
        gens.push_back(Permutation(std::move(img)));
    }

    OliverWitness w;
    w.group = group_closure(gens);
    w.normal_gens = translations;
    w.prime = p;
    return w;
}

namespace {

Permutation double_cycle(int p) {
    std::vector<std::uint8_t> img(2 * p);
    for (int i = 0; i < p; ++i) {
        img[i] = static_cast<std::uint8_t>((i + 1) % p);
        img[p + i] = static_cast<std::uint8_t>(p + (i + 1) % p);
    }
    return Permutation(std::move(img));
}

Permutation transposition(int degree, int a, int b) {
    Permutation id(degree);
    auto img = id.images();
    std::swap(img[a], img[b]);
    return Permutation(std::move(img));
}

}  // namespace

OliverWitness matching_oliver_group(int p) {
    if (!is_prime(p) || 2 * p > kMaxVertices)
        throw InputError("matching_oliver_group: need a prime p with 2p <= 16");
    std::vector<Permutation> flips;
    for (int i = 0; i < p; ++i) flips.push_back(transposition(2 * p, i, p + i));
    std::vector<Permutation> gens = flips;
    gens.push_back(double_cycle(p));

    OliverWitness w;
    w.group = group_closure(gens);
    w.normal_gens = flips;
    w.prime = 2;
    return w;
}

OliverWitness double_pcycle_group(int p) {
    if (!is_prime(p) || p == 2 || 2 * p > kMaxVertices)
        throw InputError("double_pcycle_group: need an odd prime p with 2p <= 16");
    std::vector<std::uint8_t> swap_img(2 * p);
    for (int i = 0; i < p; ++i) {
        swap_img[i] = static_cast<std::uint8_t>(p + i);
        swap_img[p + i] = static_cast<std::uint8_t>(i);
    }
    Permutation alpha{std::move(swap_img)};
    std::vector<std::uint8_t> beta_img(2 * p), gamma_img(2 * p);
    for (int i = 0; i < p; ++i) {
        beta_img[i] = static_cast<std::uint8_t>((i + 1) % p);
        beta_img[p + i] = static_cast<std::uint8_t>(p + i);
        gamma_img[i] = static_cast<std::uint8_t>(i);
        gamma_img[p + i] = static_cast<std::uint8_t>(p + (i + 1) % p);
    }
    Permutation beta{std::move(beta_img)}, gamma{std::move(gamma_img)};

    OliverWitness w;
    w.group = group_closure({alpha, beta, gamma});
    w.normal_gens = {beta, gamma};
    w.prime = p;
    return w;
}

OliverWitness type1_group() {
    Permutation a = Permutation::from_cycles("(0 5)", 10);
    Permutation b = Permutation::from_cycles("(1 2 3 4 6 7 8 9)", 10);
    OliverWitness w;
    w.group = group_closure({a, b});
    w.normal_gens = {a, b};  // the whole group is a 2-group
    w.prime = 2;
    return w;
}

OliverWitness type37_group() { return double_pcycle_group(5); }

}  // namespace evasive
