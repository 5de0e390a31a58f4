#include "pipcat/poly.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "pipcat/errors.hpp"

namespace pipcat {

namespace {

// Writes one signed term; `body` is the monomial text, empty for a constant.
void append_term(std::ostringstream& os, bool first, const BigInt& c, const std::string& body) {
    const BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
        if (c < 0) {
            os << '-';
        }
    } else {
        os << (c < 0 ? " - " : " + ");
    }
    if (body.empty()) {
        os << mag;
    } else if (mag == 1) {
        os << body;
    } else {
        os << mag << '*' << body;
    }
}

}  // namespace

IntPolynomial::IntPolynomial(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

IntPolynomial IntPolynomial::from_counts(const std::vector<std::size_t>& counts) {
    std::vector<BigInt> c;
    c.reserve(counts.size());
    for (std::size_t v : counts) {
        c.emplace_back(v);
    }
    return IntPolynomial(std::move(c));
}

void IntPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) {
        coeffs_.pop_back();
    }
}

BigInt IntPolynomial::coefficient(int i) const {
    if (i < 0 || i > degree()) {
        return 0;
    }
    return coeffs_[static_cast<std::size_t>(i)];
}

BigInt IntPolynomial::evaluate(const BigInt& t) const {
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * t + *it;
    }
    return acc;
}

IntPolynomial IntPolynomial::derivative() const {
    std::vector<BigInt> c;
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        c.push_back(coeffs_[i] * static_cast<long long>(i));
    }
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::substitute_shift(const BigInt& a) const {
    const IntPolynomial linear({a, BigInt(1)});
    IntPolynomial acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * linear + IntPolynomial({*it});
    }
    return acc;
}

std::string IntPolynomial::to_string(std::string_view var) const {
    if (coeffs_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) {
            continue;
        }
        std::string body;
        if (i == 1) {
            body = std::string(var);
        } else if (i > 1) {
            body = std::string(var) + "^" + std::to_string(i);
        }
        append_term(os, first, coeffs_[i], body);
        first = false;
    }
    return os.str();
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<BigInt> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) {
        c[i] = a.coefficient(static_cast<int>(i)) + b.coefficient(static_cast<int>(i));
    }
    return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<BigInt> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) {
        c[i] = a.coefficient(static_cast<int>(i)) - b.coefficient(static_cast<int>(i));
    }
    return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.coeffs_.empty() || b.coeffs_.empty()) {
        return {};
    }
    std::vector<BigInt> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            c[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return IntPolynomial(std::move(c));
}

void MultiPolynomial::add_term(const Exponents& e, const BigInt& c) {
    if (static_cast<int>(e.size()) != vars_) {
        throw PreconditionError("exponent vector has " + std::to_string(e.size()) + " entries, expected " +
                                std::to_string(vars_));
    }
    if (c == 0) {
        return;
    }
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

MultiPolynomial MultiPolynomial::shift_variables(const std::vector<int>& vars, const BigInt& a) const {
    MultiPolynomial out(vars_);
    for (const auto& [e, c] : terms_) {
        // Expand Π (x_v + a)^{e_v} one shifted variable at a time.
        std::vector<std::pair<Exponents, BigInt>> partial{{e, c}};
        for (int v : vars) {
            std::vector<std::pair<Exponents, BigInt>> next;
            for (const auto& [pe, pc] : partial) {
                const int power = pe[static_cast<std::size_t>(v)];
                BigInt apow = 1;
                for (int k = power; k >= 0; --k) {
                    Exponents ne = pe;
                    ne[static_cast<std::size_t>(v)] = k;
                    next.emplace_back(std::move(ne), pc * binomial(power, k) * apow);
                    apow *= a;
                }
            }
            partial = std::move(next);
        }
        for (const auto& [pe, pc] : partial) {
            out.add_term(pe, pc);
        }
    }
    return out;
}

MultiPolynomial MultiPolynomial::substitute(const std::map<int, BigInt>& values) const {
    std::vector<int> keep;
    for (int v = 0; v < vars_; ++v) {
        if (!values.contains(v)) {
            keep.push_back(v);
        }
    }
    MultiPolynomial out(static_cast<int>(keep.size()));
    for (const auto& [e, c] : terms_) {
        BigInt coeff = c;
        for (const auto& [v, value] : values) {
            coeff *= boost::multiprecision::pow(value, static_cast<unsigned>(e.at(static_cast<std::size_t>(v))));
        }
        Exponents ne;
        ne.reserve(keep.size());
        for (int v : keep) {
            ne.push_back(e[static_cast<std::size_t>(v)]);
        }
        out.add_term(ne, coeff);
    }
    return out;
}

IntPolynomial MultiPolynomial::to_univariate() const {
    std::vector<BigInt> c;
    for (const auto& [e, coeff] : terms_) {
        int d = 0;
        for (int x : e) {
            d += x;
        }
        if (c.size() <= static_cast<std::size_t>(d)) {
            c.resize(static_cast<std::size_t>(d) + 1);
        }
        c[static_cast<std::size_t>(d)] += coeff;
    }
    return IntPolynomial(std::move(c));
}

std::string MultiPolynomial::to_string(const std::vector<std::string>& names) const {
    if (static_cast<int>(names.size()) != vars_) {
        throw PreconditionError("expected " + std::to_string(vars_) + " variable names");
    }
    if (terms_.empty()) {
        return "0";
    }
    // Lower total degree first, then the map's exponent order.
    std::vector<const std::pair<const Exponents, BigInt>*> order;
    for (const auto& t : terms_) {
        order.push_back(&t);
    }
    auto total = [](const Exponents& e) {
        int s = 0;
        for (int x : e) {
            s += x;
        }
        return s;
    };
    std::stable_sort(order.begin(), order.end(), [&](auto* l, auto* r) { return total(l->first) < total(r->first); });
    std::ostringstream os;
    bool first = true;
    for (const auto* t : order) {
        std::string body;
        for (int v = 0; v < vars_; ++v) {
            const int p = t->first[static_cast<std::size_t>(v)];
            if (p == 0) {
                continue;
            }
            if (!body.empty()) {
                body += '*';
            }
            body += names[static_cast<std::size_t>(v)];
            if (p > 1) {
                body += "^" + std::to_string(p);
            }
        }
        append_term(os, first, t->second, body);
        first = false;
    }
    return os.str();
}

MultiPolynomial operator+(const MultiPolynomial& a, const MultiPolynomial& b) {
    if (a.vars_ != b.vars_) {
        throw PreconditionError("variable counts differ");
    }
    MultiPolynomial out = a;
    for (const auto& [e, c] : b.terms_) {
        out.add_term(e, c);
    }
    return out;
}

std::vector<std::string> colour_variable_names(int r, bool with_y) {
    std::vector<std::string> names;
    for (int i = 1; i <= r; ++i) {
        names.push_back("x" + std::to_string(i));
    }
    if (with_y) {
        for (int i = 1; i <= r; ++i) {
            names.push_back("y" + std::to_string(i));
        }
    }
    return names;
}

BigInt binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    BigInt out = 1;
    for (int i = 1; i <= k; ++i) {
        out = out * (n - k + i) / i;
    }
    return out;
}

IntPolynomial f_poly_simplicial(const SimplicialComplex& k) { return IntPolynomial::from_counts(k.f_vector()); }

IntPolynomial f_poly_cubical(const CubicalComplex& x) { return IntPolynomial::from_counts(x.f_vector()); }

IntPolynomial f_poly_cubical(const AbstractCubicalComplex& a) { return IntPolynomial::from_counts(a.f_vector()); }

IntPolynomial f_poly_derivative(const std::vector<DerivativeComponent>& d) {
    std::vector<std::size_t> counts;
    for (const auto& comp : d) {
        for (int r : comp.poset.rank) {
            if (counts.size() <= static_cast<std::size_t>(r)) {
                counts.resize(static_cast<std::size_t>(r) + 1, 0);
            }
            ++counts[static_cast<std::size_t>(r)];
        }
    }
    return IntPolynomial::from_counts(counts);
}

BigInt euler_characteristic(const IntPolynomial& cubical) { return cubical.evaluate(-1); }

BigInt hyperplane_count(const IntPolynomial& cubical) {
    BigInt out = 0;
    for (int i = 1; i <= cubical.degree(); ++i) {
        const BigInt term = cubical.coefficient(i) * i;
        out += (i % 2 == 1) ? term : BigInt(-term);
    }
    return out;
}

std::vector<BigInt> transform_T(const std::vector<BigInt>& simplicial) {
    std::vector<BigInt> out(simplicial.size());
    for (std::size_t i = 0; i < simplicial.size(); ++i) {
        for (std::size_t j = i; j < simplicial.size(); ++j) {
            out[i] += binomial(static_cast<int>(j), static_cast<int>(i)) * simplicial[j];
        }
    }
    return out;
}

std::vector<BigInt> transform_T_inverse(const std::vector<BigInt>& cubical) {
    std::vector<BigInt> out(cubical.size());
    for (std::size_t i = 0; i < cubical.size(); ++i) {
        for (std::size_t j = i; j < cubical.size(); ++j) {
            const BigInt term = binomial(static_cast<int>(j), static_cast<int>(i)) * cubical[j];
            out[i] += ((j - i) % 2 == 0) ? term : BigInt(-term);
        }
    }
    return out;
}

MultiPolynomial coloured_f_simplicial(const SimplicialComplex& k, const SimplicialColoring& ks) {
    require_valid_coloring(k, ks);
    MultiPolynomial out(ks.r);
    MultiPolynomial::Exponents e(static_cast<std::size_t>(ks.r));
    for (ElementSet face : k.faces()) {
        std::fill(e.begin(), e.end(), 0);
        for (int v : face) {
            ++e[static_cast<std::size_t>(ks[v])];
        }
        out.add_term(e, 1);
    }
    return out;
}

MultiPolynomial coloured_f_cubical(const std::vector<std::vector<int>>& faces, const CubicalColoring& kc) {
    if (auto bad = invalid_face(faces, kc)) {
        throw InvalidColoring("colouring is not a bijection onto a cube face on face " + std::to_string(*bad));
    }
    const int r = kc.r;
    MultiPolynomial out(2 * r);
    MultiPolynomial::Exponents e(static_cast<std::size_t>(2 * r));
    for (const auto& face : faces) {
        std::uint64_t all = ~std::uint64_t{0};
        std::uint64_t any = 0;
        for (int v : face) {
            all &= kc.label[static_cast<std::size_t>(v)];
            any |= kc.label[static_cast<std::size_t>(v)];
        }
        const std::uint64_t varying = any ^ all;
        for (int i = 0; i < r; ++i) {
            e[static_cast<std::size_t>(i)] = static_cast<int>((varying >> i) & 1U);
            e[static_cast<std::size_t>(r + i)] = static_cast<int>((all >> i) & 1U);
        }
        out.add_term(e, 1);
    }
    return out;
}

MultiPolynomial coloured_f_cubical(const CubicalComplex& x, const CubicalColoring& kc) {
    std::vector<std::vector<int>> faces;
    faces.reserve(x.faces().size());
    for (const auto& f : x.faces()) {
        faces.push_back(x.vertex_set(f));
    }
    return coloured_f_cubical(faces, kc);
}

MultiPolynomial coloured_f_cubical(const AbstractCubicalComplex& a, const CubicalColoring& kc) {
    return coloured_f_cubical(a.faces(), kc);
}

}  // namespace pipcat
