#include "apofamily/multipoly.hpp"

#include <algorithm>
#include <sstream>

namespace apofamily {

namespace {

const std::vector<std::string>& canonical_names() {
    static const std::vector<std::string> names = {"x", "y", "z", "X", "Y", "Z"};
    return names;
}

std::size_t canonical_rank(const std::string& v) {
    const auto& names = canonical_names();
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == v) return i;
    throw std::invalid_argument("VarSet: unknown variable '" + v + "'");
}

}  // namespace

VarSet::VarSet(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty()) throw std::invalid_argument("VarSet: empty");
    for (const auto& v : names_) canonical_rank(v);
    for (std::size_t i = 0; i < names_.size(); ++i)
        for (std::size_t j = i + 1; j < names_.size(); ++j)
            if (names_[i] == names_[j]) throw std::invalid_argument("VarSet: duplicate '" + names_[i] + "'");
}

VarSet VarSet::of(const std::string& comma_separated) {
    std::vector<std::string> names;
    std::string cur;
    for (char ch : comma_separated) {
        if (ch == ',') {
            names.push_back(cur);
            cur.clear();
        } else if (ch != ' ') {
            cur.push_back(ch);
        }
    }
    if (!cur.empty()) names.push_back(cur);
    return VarSet(names);
}

std::optional<std::size_t> VarSet::index_of(const std::string& v) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == v) return i;
    return std::nullopt;
}

VarSet VarSet::merged(const VarSet& a, const VarSet& b) {
    std::vector<std::string> names;
    for (const auto& v : canonical_names())
        if (a.contains(v) || b.contains(v)) names.push_back(v);
    return VarSet(names);
}

bool TermOrder::operator()(const ExpVec& a, const ExpVec& b) const {
    for (std::size_t i = a.size(); i-- > 1;) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return a[0] > b[0];
}

MultiPoly MultiPoly::constant(const VarSet& vars, const Rational& c) {
    MultiPoly p(vars);
    if (!c.is_zero()) p.terms_.emplace(ExpVec(vars.size(), 0), c);
    return p;
}

MultiPoly MultiPoly::variable(const VarSet& vars, const std::string& name) {
    auto idx = vars.index_of(name);
    if (!idx) throw std::invalid_argument("MultiPoly::variable: '" + name + "' not in variable set");
    ExpVec e(vars.size(), 0);
    e[*idx] = 1;
    return monomial(vars, e, Rational(1));
}

MultiPoly MultiPoly::monomial(const VarSet& vars, const ExpVec& exps, const Rational& c) {
    if (exps.size() != vars.size()) throw std::invalid_argument("MultiPoly::monomial: exponent arity mismatch");
    MultiPoly p(vars);
    if (!c.is_zero()) p.terms_.emplace(exps, c);
    return p;
}

bool MultiPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const auto& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](unsigned v) { return v == 0; });
}

Rational MultiPoly::constant_term() const { return coeff(ExpVec(vars_.size(), 0)); }

Rational MultiPoly::coeff(const ExpVec& exps) const {
    auto it = terms_.find(exps);
    return it == terms_.end() ? Rational(0) : it->second;
}

long MultiPoly::total_degree() const {
    long deg = -1;
    for (const auto& [e, c] : terms_) {
        long d = 0;
        for (unsigned v : e) d += v;
        deg = std::max(deg, d);
    }
    return deg;
}

long MultiPoly::degree_in(const std::string& var) const {
    auto idx = vars_.index_of(var);
    if (!idx) return 0;
    long deg = is_zero() ? -1 : 0;
    for (const auto& [e, c] : terms_) deg = std::max(deg, static_cast<long>(e[*idx]));
    return deg;
}

void MultiPoly::insert_term(const ExpVec& exps, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(exps, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly p(vars_);
    for (const auto& [e, c] : terms_) p.terms_.emplace(e, -c);
    return p;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    if (vars_ != o.vars_) {
        *this = poly_arith(*this, o, PolyOp::add);
        return *this;
    }
    for (const auto& [e, c] : o.terms_) insert_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    if (vars_ != o.vars_) {
        *this = poly_arith(*this, o, PolyOp::sub);
        return *this;
    }
    for (const auto& [e, c] : o.terms_) insert_term(e, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    if (a.vars_ != b.vars_) return poly_arith(a, b, PolyOp::mul);
    MultiPoly p(a.vars_);
    ExpVec e(a.vars_.size());
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            p.insert_term(e, ca * cb);
        }
    }
    return p;
}

MultiPoly MultiPoly::scaled(const Rational& c) const {
    MultiPoly p(vars_);
    if (c.is_zero()) return p;
    for (const auto& [e, v] : terms_) p.terms_.emplace(e, v * c);
    return p;
}

MultiPoly MultiPoly::pow(long e) const {
    if (e < 0) throw std::domain_error("MultiPoly::pow: negative exponent");
    MultiPoly r = constant(vars_, Rational(1));
    MultiPoly base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return r;
}

MultiPoly MultiPoly::derivative(const std::string& var) const {
    auto idx = vars_.index_of(var);
    if (!idx) return zero(vars_);
    MultiPoly p(vars_);
    for (const auto& [e, c] : terms_) {
        if (e[*idx] == 0) continue;
        ExpVec d = e;
        d[*idx] -= 1;
        p.insert_term(d, c * Rational(static_cast<long>(e[*idx])));
    }
    return p;
}

MultiPoly MultiPoly::antiderivative(const std::string& var) const {
    auto idx = vars_.index_of(var);
    if (!idx) throw std::invalid_argument("antiderivative: '" + var + "' not in variable set");
    MultiPoly p(vars_);
    for (const auto& [e, c] : terms_) {
        ExpVec d = e;
        d[*idx] += 1;
        p.insert_term(d, c / Rational(static_cast<long>(d[*idx])));
    }
    return p;
}

MultiPoly MultiPoly::substitute(const std::vector<std::pair<std::string, MultiPoly>>& subs) const {
    VarSet target = vars_;
    for (const auto& [v, rep] : subs) target = VarSet::merged(target, rep.vars());

    // Per-variable replacement polynomials over the target set; untouched
    // variables map to themselves.
    std::vector<MultiPoly> rep(vars_.size(), MultiPoly(target));
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        const MultiPoly* found = nullptr;
        for (const auto& [v, r] : subs)
            if (v == vars_.name(i)) found = &r;
        rep[i] = found ? found->extended_to(target) : MultiPoly::variable(target, vars_.name(i));
    }

    // Cache powers of each replacement up to the degree that appears.
    std::vector<std::vector<MultiPoly>> pows(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) pows[i].push_back(MultiPoly::constant(target, Rational(1)));

    MultiPoly out(target);
    for (const auto& [e, c] : terms_) {
        MultiPoly term = MultiPoly::constant(target, c);
        for (std::size_t i = 0; i < e.size(); ++i) {
            while (pows[i].size() <= e[i]) pows[i].push_back(pows[i].back() * rep[i]);
            if (e[i] > 0) term = term * pows[i][e[i]];
        }
        out += term;
    }
    return out;
}

MultiPoly MultiPoly::substitute_affine(const std::string& var, const Rational& scale,
                                       const Rational& shift) const {
    MultiPoly r = MultiPoly::variable(vars_, var).scaled(scale) + MultiPoly::constant(vars_, shift);
    return substitute({{var, r}});
}

MultiPoly MultiPoly::evaluate_partial(const std::vector<std::pair<std::string, Rational>>& point) const {
    std::vector<std::pair<std::string, MultiPoly>> subs;
    for (const auto& [v, c] : point) subs.emplace_back(v, MultiPoly::constant(vars_, c));
    return substitute(subs);
}

Rational MultiPoly::evaluate(const std::vector<std::pair<std::string, Rational>>& point) const {
    MultiPoly r = evaluate_partial(point);
    if (!r.is_constant()) throw std::invalid_argument("MultiPoly::evaluate: unassigned variables remain");
    return r.constant_term();
}

MultiPoly MultiPoly::extended_to(const VarSet& vars) const {
    if (vars == vars_) return *this;
    std::vector<std::size_t> where(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        auto idx = vars.index_of(vars_.name(i));
        if (!idx) throw std::invalid_argument("extended_to: target set misses '" + vars_.name(i) + "'");
        where[i] = *idx;
    }
    MultiPoly p(vars);
    for (const auto& [e, c] : terms_) {
        ExpVec w(vars.size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) w[where[i]] = e[i];
        p.terms_.emplace(w, c);
    }
    return p;
}

Rational MultiPoly::max_abs_coeff() const {
    Rational m(0);
    for (const auto& [e, c] : terms_) m = std::max(m, c.abs());
    return m;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
    if (a.vars_ == b.vars_) return a.terms_ == b.terms_;
    VarSet m = VarSet::merged(a.vars_, b.vars_);
    return a.extended_to(m).terms_ == b.extended_to(m).terms_;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational a = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        bool has_vars = std::any_of(e.begin(), e.end(), [](unsigned v) { return v != 0; });
        bool coef_shown = !a.is_one() || !has_vars;
        if (coef_shown) os << a.to_string();
        bool need_star = coef_shown;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (need_star) os << "*";
            os << vars_.name(i);
            if (e[i] > 1) os << "^" << e[i];
            need_star = true;
        }
    }
    return os.str();
}

MultiPoly poly_arith(const MultiPoly& p, const MultiPoly& q, PolyOp op) {
    VarSet m = VarSet::merged(p.vars(), q.vars());
    MultiPoly a = p.extended_to(m);
    MultiPoly b = q.extended_to(m);
    switch (op) {
        case PolyOp::add: return a + b;
        case PolyOp::sub: return a - b;
        case PolyOp::mul: return a * b;
        case PolyOp::scale:
            if (!b.is_constant()) throw std::invalid_argument("poly_arith: scale needs a constant operand");
            return a.scaled(b.constant_term());
    }
    throw std::logic_error("poly_arith: unknown op");
}

}  // namespace apofamily
