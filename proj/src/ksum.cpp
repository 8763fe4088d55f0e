#include "qvertex/ksum.hpp"

#include <stdexcept>

#include "qvertex/prodred.hpp"
#include "qvertex/vertex.hpp"

namespace qvertex {

namespace {

Exponent t_exp(int e) { return unit_exponent(var::t, e); }
LaurentFraction tpow(int e) { return LaurentPoly::var_power(var::t, e); }

Rat pow2(int e) {
    Rat r = 1;
    for (int i = 0; i < std::abs(e); ++i) r *= 2;
    return e >= 0 ? r : Rat(1 / r);
}

std::string pair_name(const Partition& a, const Partition& b) { return to_string(a) + " | " + to_string(b); }

std::string tuple_name(const std::vector<Partition>& mus) {
    std::string s;
    for (const auto& m : mus) s += (s.empty() ? "" : " | ") + to_string(m);
    return s;
}

// Generalized binomial coefficient a choose n.
Rat binomial(int a, int n) {
    Rat r = 1;
    for (int i = 0; i < n; ++i) r = r * Rat(a - i) / Rat(i + 1);
    return r;
}

QSeries scaled(const QSeries& s, const LaurentFraction& c) { return s.scaled(c); }

}  // namespace

QSeries k_brute(const Partition& mu1, const Partition& mu2, int D) {
    QSeries out(D, LaurentFraction{});
    for (const auto& nu : enumerate(D)) out[nu.weight()] += w2(mu1, nu) * w2(nu, mu2);
    return out;
}

QSeries k00_closed(int D) {
    QSeries log(D, LaurentFraction{});
    for (int n = 1; n <= D; ++n)
        // (Q/q)^n / (n (1 - q^-n)^2) = q^n / (n (1 - q^n)^2)
        log[n] = LaurentFraction::over_binomial(LaurentPoly::var_power(var::t, 2 * n, Rat(1, n)), t_exp(2 * n), 2);
    return series_exp(log);
}

QSeries k_exp_form(const Partition& mu1, const Partition& mu2, int D) {
    QSeries log(D, LaurentFraction{});
    LaurentPoly f = f_pair(mu1, mu2);
    for (int n = 1; n <= D; ++n) log[n] = LaurentFraction(f.scaled_exponents(n)) * Rat(1, n);
    return series_exp(log);
}

QSeries k_product_form(const CoeffTable& c, int D) {
    QSeries out = QSeries::constant(D, 1);
    for (const auto& [k, ck] : c) {
        if (ck == 0) continue;
        // (1 - x Q)^(-ck) = sum_n binom(-ck, n) (-x)^n Q^n, x = q^k
        QSeries factor(D, LaurentFraction{});
        for (int n = 0; n <= D; ++n) {
            Rat coeff = binomial(-ck, n) * (n % 2 == 0 ? 1 : -1);
            factor[n] = LaurentPoly::var_power(var::t, 2 * k * n, coeff);
        }
        out *= factor;
    }
    return out;
}

LaurentFraction kt_product(const Partition& mu1, const Partition& mu2) {
    LaurentFraction r(1);
    for (const auto& [k, ck] : c_coeffs(mu1, mu2.conjugate()))
        r *= LaurentFraction::over_binomial(1, t_exp(2 * k) + unit_exponent(var::s, 2), ck);
    return r;
}

LaurentFraction k_transposed_rational(const Partition& mu1, const Partition& mu2) {
    return w1(mu1) * w1(mu2.conjugate()) * product_over(pair_multiset(mu1, mu2), FactorKind::one_minus_Qq());
}

VerificationReport verify_k_forms(const Partition& mu1, const Partition& mu2, int D) {
    VerificationReport rep;
    std::string inst = pair_name(mu1, mu2) + " D=" + std::to_string(D);
    QSeries brute = k_brute(mu1, mu2, D);
    QSeries base = scaled(k00_closed(D), w1(mu1) * w1(mu2));
    rep.entries.push_back(check_equal("K = K00 W W exp(sum Q^n f(q^n)/n)", inst, brute, base * k_exp_form(mu1, mu2, D)));
    rep.entries.push_back(check_equal("K = K00 W W prod (1-q^k Q)^-C_k", inst, brute,
                                      base * k_product_form(c_coeffs(mu1, mu2), D)));
    return rep;
}

VerificationReport verify_transposed_k(const Partition& mu1, const Partition& mu2, int D) {
    VerificationReport rep;
    std::string inst = pair_name(mu1, mu2);
    int weight = mu1.weight() + mu2.weight();
    Partition mu2t = mu2.conjugate();
    LaurentFraction product = kt_product(mu1, mu2);

    QSeries ratio_series = scaled(k00_closed(D), w1(mu1) * w1(mu2t)) * q_expand(product, D);
    rep.entries.push_back(check_equal("K(mu1,mu2^t) = K00 W W prod (1-q^k Q)^-C_k", inst + " D=" + std::to_string(D),
                                      k_brute(mu1, mu2t, D), ratio_series));
    rep.entries.push_back(check_equal("prod (1-q^k Q)^-C_k = multiset form", inst, product,
                                      product_over(pair_multiset(mu1, mu2), FactorKind::one_minus_Qq())));
    // Q^(-w/2) 2^(-w) q^(-(kappa1-kappa2)/4) prod sinh/sinh
    LaurentFraction prefactor =
        LaurentFraction(LaurentPoly::monomial(unit_exponent(var::s, -weight) + t_exp(-(mu1.kappa() - mu2.kappa()) / 2),
                                              pow2(-weight)));
    rep.entries.push_back(check_equal("prod (1-q^k Q)^-C_k = sinh form", inst, product,
                                      prefactor * product_over(pair_sums(mu1, mu2), FactorKind::sinh(1))));
    return rep;
}

VerificationReport verify_squared_k(const Partition& mu1, const Partition& mu2) {
    VerificationReport rep;
    std::string inst = pair_name(mu1, mu2);
    int weight = mu1.weight() + mu2.weight();
    int dk = mu1.kappa() - mu2.kappa();
    LaurentFraction product = kt_product(mu1, mu2);
    LaurentFraction block12 = product_over(pair_sums(mu1, mu2), FactorKind::sinh(1));
    LaurentFraction block21 = product_over(pair_sums(mu2, mu1), FactorKind::sinh(-1));

    LaurentFraction two_block_pre = LaurentPoly::monomial(unit_exponent(var::s, -2 * weight) + t_exp(-dk), pow2(-2 * weight));
    rep.entries.push_back(check_equal("prod (1-q^k Q)^-2C_k = off-diagonal sinh blocks", inst, product * product,
                                      two_block_pre * block12 * block21));

    LaurentFraction ratio = k_transposed_rational(mu1, mu2);
    LaurentFraction k2_pre = LaurentPoly::monomial(unit_exponent(var::s, -2 * weight), pow2(-4 * weight));
    LaurentFraction diag = diag_block_ratio(mu1, FactorKind::sinh(0)) * diag_block_ratio(mu2, FactorKind::sinh(0));
    rep.entries.push_back(check_equal("(K(mu1,mu2^t)/K00)^2 = four sinh blocks", inst, ratio * ratio,
                                      k2_pre * diag * block12 * block21));
    return rep;
}

int kahler_var(int k) {
    if (k == 1) return var::s;
    if (k == 2) return var::s2;
    throw std::invalid_argument("at most two Kahler parameters");
}

namespace {

void check_n(const std::vector<Partition>& mus) {
    if (mus.size() != 2 && mus.size() != 3) throw std::invalid_argument("N must be 2 or 3");
}

int inner_trunc(const std::vector<Partition>& mus, int D) { return mus.size() == 3 ? D : 0; }

// Degrees of P_kl = Q_k ... Q_{l-1} (1-based k < l) on the (Q_1, Q_2) lattice.
std::pair<int, int> block_degrees(int k, int l) {
    int d1 = (k <= 1 && 1 < l) ? 1 : 0;
    int d2 = (k <= 2 && 2 < l) ? 1 : 0;
    return {d1, d2};
}

Exponent block_shift(int k, int l) {
    Exponent e{};
    for (int m = k; m < l; ++m) e = e + unit_exponent(kahler_var(m), 1);
    return e;
}

QSeries2 embed(const QSeries& a, int k, int l, int To, int Ti) {
    auto [d1, d2] = block_degrees(k, l);
    return embed_series2(a, d1, d2, To, Ti);
}

}  // namespace

QSeries2 ktilde_brute(const std::vector<Partition>& mus, int D) {
    check_n(mus);
    int Ti = inner_trunc(mus, D);
    QSeries2 out(D, QSeries(Ti, LaurentFraction{}));
    Partition empty;
    const auto nus = enumerate(D);
    if (mus.size() == 2) {
        for (const auto& nu : nus) {
            LaurentFraction term = w3(empty, mus[0], nu.conjugate()) * w3(nu, mus[1], empty);
            out[nu.weight()][0] += term.shifted(t_exp(nu.kappa()));
        }
        return out;
    }
    for (const auto& nu1 : nus) {
        LaurentFraction first = w3(empty, mus[0], nu1.conjugate()).shifted(t_exp(nu1.kappa()));
        for (const auto& nu2 : nus) {
            LaurentFraction term = first * w3(nu1, mus[1], nu2.conjugate()) * w3(nu2, mus[2], empty);
            out[nu1.weight()][nu2.weight()] += term.shifted(t_exp(nu2.kappa()));
        }
    }
    return out;
}

VerificationReport verify_kgen_forms(const std::vector<Partition>& mus, int D) {
    check_n(mus);
    VerificationReport rep;
    std::string inst = tuple_name(mus) + " D=" + std::to_string(D);
    int n = static_cast<int>(mus.size());
    int Ti = inner_trunc(mus, D);
    QSeries2 brute = ktilde_brute(mus, D);

    LaurentFraction wprod(1);
    for (const auto& mu : mus) wprod *= w1(mu);
    QSeries2 base = QSeries2::constant(D, QSeries::constant(Ti, wprod));
    QSeries2 product_side = base, exp_side = base;
    QSeries k00 = k00_closed(D);
    for (int k = 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l) {
            const Partition &a = mus[static_cast<std::size_t>(k - 1)], &b = mus[static_cast<std::size_t>(l - 1)];
            product_side *= embed(k00 * k_product_form(c_coeffs(a, b.conjugate()), D), k, l, D, Ti);
            QSeries log(D, LaurentFraction{});
            LaurentPoly f = f_pair(a, b.conjugate());
            for (int m = 1; m <= D; ++m) log[m] = LaurentFraction(f.scaled_exponents(m)) * Rat(1, m);
            exp_side *= embed(k00 * series_exp(log), k, l, D, Ti);
        }
    rep.entries.push_back(check_equal("Ktilde = prod K00 prod W prod (1-q^n P)^-C_n", inst, brute, product_side));
    rep.entries.push_back(check_equal("Ktilde = prod K00 prod W exp(sum P^n f(q^n)/n)", inst, brute,
                                      exp_side));
    return rep;
}

VerificationReport verify_sun_squares(const std::vector<Partition>& mus, int D) {
    check_n(mus);
    VerificationReport rep;
    std::string inst = tuple_name(mus);
    int n = static_cast<int>(mus.size());
    int Ti = inner_trunc(mus, D);

    // Exact Ktilde / prod K00.
    LaurentFraction exact(1);
    for (const auto& mu : mus) exact *= w1(mu);
    for (int k = 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l)
            exact *= product_over(pair_multiset(mus[static_cast<std::size_t>(k - 1)], mus[static_cast<std::size_t>(l - 1)]),
                                  FactorKind::one_minus_Qq(block_shift(k, l)));

    QSeries2 k00s = QSeries2::constant(D, QSeries::constant(Ti, 1));
    for (int k = 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l) k00s *= embed(k00_closed(D), k, l, D, Ti);
    int inner_var = n == 3 ? kahler_var(2) : var::s2;
    rep.entries.push_back(check_equal("Ktilde / prod K00 = exact ratio", inst + " D=" + std::to_string(D),
                                      ktilde_brute(mus, D), k00s * q_expand2(exact, kahler_var(1), inner_var, D, Ti)));

    int total = 0;
    for (const auto& mu : mus) total += mu.weight();
    Exponent pre{};
    for (int k = 1; k < n; ++k) {
        int below = 0, above = 0;
        for (int j = 1; j <= k; ++j) below += mus[static_cast<std::size_t>(j - 1)].weight();
        for (int j = k + 1; j <= n; ++j) above += mus[static_cast<std::size_t>(j - 1)].weight();
        pre = pre + unit_exponent(kahler_var(k), -2 * ((n - k) * below + k * above));
    }
    int tpower = 0;
    for (int k = 1; k <= n; ++k) tpower += (2 * k - n) * mus[static_cast<std::size_t>(k - 1)].kappa();
    LaurentFraction rhs = LaurentPoly::monomial(pre + t_exp(tpower), pow2(-2 * n * total));
    for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l) {
            const Partition &a = mus[static_cast<std::size_t>(k - 1)], &b = mus[static_cast<std::size_t>(l - 1)];
            if (k == l) {
                rhs *= diag_block_ratio(a, FactorKind::sinh(0));
            } else {
                Exponent shift = k < l ? block_shift(k, l) : (-1) * block_shift(l, k);
                rhs *= product_over(pair_sums(a, b), FactorKind::sinh(shift));
            }
        }
    rep.entries.push_back(check_equal("(Ktilde / prod K00)^2 = sinh blocks", inst, exact * exact, rhs));
    return rep;
}

VerificationReport verify_k_suite(int max_weight, int D, int transposed_max_weight) {
    VerificationReport rep;
    rep.suite = "k";
    rep.params["max_weight"] = std::to_string(max_weight);
    rep.params["qdeg"] = std::to_string(D);
    rep.params["transposed_max_weight"] = std::to_string(transposed_max_weight);
    rep.entries.push_back(check_equal("K00 brute = closed", "D=" + std::to_string(D), k_brute({}, {}, D), k00_closed(D)));
    for (const auto& a : enumerate(max_weight))
        for (const auto& b : enumerate(max_weight - a.weight())) rep.append(verify_k_forms(a, b, D));
    for (const auto& a : enumerate(transposed_max_weight))
        for (const auto& b : enumerate(transposed_max_weight - a.weight())) {
            rep.append(verify_transposed_k(a, b, D));
            rep.append(verify_squared_k(a, b));
        }
    return rep;
}

VerificationReport verify_kgen_suite(int part_weight, int D) {
    VerificationReport rep;
    rep.suite = "kgen";
    rep.params["part_weight"] = std::to_string(part_weight);
    rep.params["qdeg"] = std::to_string(D);
    const auto parts = enumerate(part_weight);
    for (const auto& a : parts)
        for (const auto& b : parts) {
            QSeries2 kt = ktilde_brute({a, b}, D);
            QSeries outer(D, LaurentFraction{});
            for (int d = 0; d <= D; ++d) outer[d] = kt[d][0];
            rep.entries.push_back(check_equal("Ktilde(N=2) = q^(kappa2/2) K(mu1,mu2^t)", pair_name(a, b),
                                              outer, scaled(k_brute(a, b.conjugate(), D), tpow(b.kappa()))));
            rep.append(verify_kgen_forms({a, b}, D));
        }
    for (const auto& a : parts)
        for (const auto& b : parts)
            for (const auto& c : parts) rep.append(verify_kgen_forms({a, b, c}, D));
    return rep;
}

VerificationReport verify_sun_suite(int part_weight, int D) {
    VerificationReport rep;
    rep.suite = "sun";
    rep.params["part_weight"] = std::to_string(part_weight);
    rep.params["qdeg"] = std::to_string(D);
    const auto parts = enumerate(part_weight);
    for (const auto& a : parts)
        for (const auto& b : parts) rep.append(verify_sun_squares({a, b}, D));
    for (const auto& a : parts)
        for (const auto& b : parts)
            for (const auto& c : parts) rep.append(verify_sun_squares({a, b, c}, D));
    return rep;
}

}  // namespace qvertex
