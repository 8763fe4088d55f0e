#include "qvertex/fcoeff.hpp"

#include "qvertex/prodred.hpp"
#include "qvertex/vertex.hpp"

namespace qvertex {

namespace {

LaurentPoly qpow(int k, int v = kT1) { return LaurentPoly::var_power(v, 2 * k); }

// sum_{i <= l} (q^(mu_i - i) - q^-i) in variable v.
LaurentPoly row_sum(const Partition& mu, int v) {
    LaurentPoly s;
    for (int i = 1; i <= mu.length(); ++i) s += qpow(mu.part(i - 1) - i, v) - qpow(-i, v);
    return s;
}

// Moves every exponent of variable `from` onto variable `to`.
LaurentPoly move_var(const LaurentPoly& p, int from, int to) {
    std::vector<LaurentPoly::Term> terms;
    for (auto [e, c] : p.terms()) {
        e[static_cast<std::size_t>(to)] += e[static_cast<std::size_t>(from)];
        e[static_cast<std::size_t>(from)] = 0;
        terms.emplace_back(e, c);
    }
    return LaurentPoly::from_terms(std::move(terms));
}

LaurentFraction move_var(const LaurentFraction& f, int from, int to) {
    return LaurentFraction(move_var(f.num(), from, to), move_var(f.den(), from, to));
}

// 1 / (q - 1) in variable v.
LaurentFraction over_q_minus_one(int v) {
    return LaurentFraction::over_binomial(-LaurentPoly(1), unit_exponent(v, 2));
}

}  // namespace

LaurentPoly f_one(const Partition& mu, FOneForm form) {
    LaurentPoly r;
    switch (form) {
        case FOneForm::contents:
            for (int c : mu.contents()) r += qpow(c);
            return r;
        case FOneForm::double_sum:
            for (int i = 1; i <= mu.length(); ++i)
                for (int j = 1; j <= mu.part(i - 1); ++j) r += qpow(j - i);
            return r;
        case FOneForm::quotient: {
            LaurentFraction f = LaurentFraction(qpow(1)) * over_q_minus_one(kT1) * LaurentFraction(row_sum(mu, kT1));
            if (!f.is_poly()) throw std::logic_error("f_mu quotient did not reduce");
            return f.num();
        }
    }
    return r;
}

LaurentPoly f_pair(const Partition& mu1, const Partition& mu2) {
    LaurentPoly f1 = f_one(mu1), f2 = f_one(mu2);
    return (qpow(1) - LaurentPoly(2) + qpow(-1)) * f1 * f2 + f1 + f2;
}

LaurentFraction f_pair_from_vertex(const Partition& mu1, const Partition& mu2) {
    Partition box{1};
    LaurentFraction w_box = w1(box);
    return (w2(mu1, box) * w2(box, mu2) - w1(mu1) * w_box * w_box * w1(mu2)) / (w1(mu1) * w1(mu2));
}

CoeffTable c_coeffs(const Partition& mu1, const Partition& mu2) {
    CoeffTable table;
    LaurentPoly f = f_pair(mu1, mu2);
    for (const auto& [e, c] : f.terms()) {
        if (e[kT1] % 2 != 0) throw std::logic_error("odd t-exponent in f");
        table[e[kT1] / 2] = static_cast<int>(c.get_num().get_si());
    }
    return table;
}

LaurentPoly f_transposed_from_multiset(const Partition& mu1, const Partition& mu2) {
    return -as_poly(pair_multiset(mu1, mu2), 2);
}

ReportEntry f_pair_transposed_identity(const Partition& mu1, const Partition& mu2) {
    std::string inst = to_string(mu1) + " | " + to_string(mu2);
    LaurentPoly f = f_pair(mu1, mu2.conjugate());
    ReportEntry e = check_equal("f(mu1,mu2^t) = -sum (q^(mu1_i-mu2_j+j-i) - q^(j-i))", inst, f,
                                f_transposed_from_multiset(mu1, mu2));
    for (const auto& [exp, c] : f.terms())
        if (c < 0) {
            e.pass = false;
            e.note = "negative coefficient";
        }
    return e;
}

LaurentFraction f_pair_2var(const Partition& mu1, const Partition& mu2, FTwoVarForm form) {
    LaurentFraction root = LaurentPoly::monomial(unit_exponent(kT1, 1) + unit_exponent(kT2, 1));  // sqrt(q1 q2)
    LaurentFraction g1 = over_q_minus_one(kT1), g2 = over_q_minus_one(kT2);
    switch (form) {
        case FTwoVarForm::definition:
            // sum_{i >= 1} q^(mu_i - i) = row_sum + 1/(q - 1)
            return root * ((LaurentFraction(row_sum(mu1, kT1)) + g1) * (LaurentFraction(row_sum(mu2, kT2)) + g2) - g1 * g2);
        case FTwoVarForm::product: {
            LaurentPoly a = LaurentPoly(1) + (qpow(1, kT1) - LaurentPoly(1)) * row_sum(mu1, kT1);
            LaurentPoly b = LaurentPoly(1) + (qpow(1, kT2) - LaurentPoly(1)) * row_sum(mu2, kT2);
            return root * g1 * g2 * LaurentFraction(a * b - LaurentPoly(1));
        }
        case FTwoVarForm::from_f_one: {
            LaurentFraction f1 = f_one(mu1), f2 = move_var(f_one(mu2), kT1, kT2);
            LaurentFraction d1 = qpow(1, kT1) - LaurentPoly(1), d2 = qpow(1, kT2) - LaurentPoly(1);
            LaurentFraction r21 = LaurentPoly::monomial(unit_exponent(kT2, 1) - unit_exponent(kT1, 1));
            LaurentFraction r12 = r21.inverse();
            return d1 * d2 / root * f1 * f2 + r21 * d1 / d2 * f1 + r12 * d2 / d1 * f2;
        }
        case FTwoVarForm::vertex: {
            Partition box{1};
            auto at2 = [](const LaurentFraction& f) { return move_var(f, kT1, kT2); };
            LaurentFraction wb1 = w1(box), wb2 = at2(w1(box));
            LaurentFraction wa = w1(mu1), wb = at2(w1(mu2));
            return (w2(mu1, box) * at2(w2(box, mu2)) - wa * wb1 * wb2 * wb) / (wa * wb);
        }
    }
    return {};
}

LaurentFraction f_transposed_2var(const Partition& mu1, const Partition& mu2) {
    // Split the (i, j) range into the finite box, the strip i <= l1 < j and
    // the strip j <= l2 < i; the remaining quadrant cancels termwise.
    int l1 = mu1.length(), l2 = mu2.length();
    LaurentPoly box;
    for (int i = 1; i <= l1; ++i)
        for (int j = 1; j <= l2; ++j)
            box += qpow(mu1.part(i - 1) - i, kT1) * qpow(-mu2.part(j - 1) + j, kT2) - qpow(-i, kT1) * qpow(j, kT2);
    LaurentPoly rows = row_sum(mu1, kT1);
    LaurentPoly cols;
    for (int j = 1; j <= l2; ++j) cols += qpow(-mu2.part(j - 1) + j, kT2) - qpow(j, kT2);
    // sum_{j > l2} q2^j = q2^(l2+1) / (1 - q2); sum_{i > l1} q1^-i = q1^-l1 / (q1 - 1)
    LaurentFraction tail2 = LaurentFraction::over_binomial(qpow(l2 + 1, kT2), unit_exponent(kT2, 2));
    LaurentFraction tail1 = LaurentFraction(qpow(-l1, kT1)) * over_q_minus_one(kT1);
    LaurentFraction sum = LaurentFraction(box) + LaurentFraction(rows) * tail2 + tail1 * LaurentFraction(cols);
    LaurentFraction root = LaurentPoly::monomial(unit_exponent(kT1, 1) - unit_exponent(kT2, 1));  // sqrt(q1/q2)
    return -(root * sum);
}

LaurentFraction diagonal(const LaurentFraction& f) { return move_var(f, kT2, kT1); }

VerificationReport verify_fcoeff(int max_weight) {
    VerificationReport rep;
    rep.suite = "f";
    rep.params["max_weight"] = std::to_string(max_weight);
    auto add = [&](ReportEntry e) { rep.entries.push_back(std::move(e)); };

    for (const auto& mu : enumerate(max_weight + 2)) {
        std::string inst = to_string(mu);
        LaurentPoly f = f_one(mu);
        add(check_equal("f_mu contents = quotient", inst, f, f_one(mu, FOneForm::quotient)));
        add(check_equal("f_mu contents = row double sum", inst, f, f_one(mu, FOneForm::double_sum)));
        add(check_equal("f_mu^t(q) = f_mu(1/q)", inst, f_one(mu.conjugate()), f.negated_exponents()));
    }

    for (int m = 1; m <= 5; ++m)
        for (int n = 1; n <= 5; ++n) {
            LaurentPoly expect = qpow(-1) + qpow(m + n - 1);
            for (int k = 0; k <= m - 2; ++k) expect += qpow(k);
            for (int k = 0; k <= n - 2; ++k) expect += qpow(k);
            add(check_equal("f_(m)(n) closed form", std::to_string(m) + " | " + std::to_string(n),
                            f_pair(Partition{m}, Partition{n}), expect));
        }

    for (const auto& a : enumerate(max_weight))
        for (const auto& b : enumerate(max_weight - a.weight())) {
            std::string inst = to_string(a) + " | " + to_string(b);
            LaurentPoly f = f_pair(a, b);
            CoeffTable table = c_coeffs(a, b);
            long total = 0, moment = 0;
            for (auto [k, c] : table) {
                total += c;
                moment += static_cast<long>(k) * c;
            }
            add(make_entry("f(1) = |mu1| + |mu2|", inst,
                           f.value_at_one() == a.weight() + b.weight() && total == a.weight() + b.weight()));
            add(make_entry("f'(1) = (kappa1 + kappa2)/2", inst,
                           2 * f.derivative_at_one(kT1, 2) == a.kappa() + b.kappa() &&
                               2 * moment == a.kappa() + b.kappa()));
            add(check_equal("f(mu1^t,mu2^t)(q) = f(mu1,mu2)(1/q)", inst, f_pair(a.conjugate(), b.conjugate()),
                            f.negated_exponents()));
            add(f_pair_transposed_identity(a, b));
            if (a.weight() + b.weight() <= 6) {
                add(check_equal("f from amplitudes", inst, LaurentFraction(f), f_pair_from_vertex(a, b)));
                LaurentFraction g = f_pair_2var(a, b);
                add(check_equal("f(q1,q2) definition = product", inst, g, f_pair_2var(a, b, FTwoVarForm::product)));
                add(check_equal("f(q1,q2) definition = f_mu form", inst, g, f_pair_2var(a, b, FTwoVarForm::from_f_one)));
                add(check_equal("f(q1,q2) from amplitudes", inst, g, f_pair_2var(a, b, FTwoVarForm::vertex)));
                add(check_equal("f(q,q) = f", inst, diagonal(g), LaurentFraction(f)));
                add(check_equal("f(mu1,mu2^t)(q1,q2) transposed sum", inst, f_pair_2var(a, b.conjugate()),
                                f_transposed_2var(a, b)));
            }
        }
    return rep;
}

}  // namespace qvertex
