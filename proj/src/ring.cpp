#include "cidim/ring.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace cidim {

bool lex_less(const Monomial& a, const Monomial& b) {
    return std::lexicographical_compare(a.e.begin(), a.e.end(), b.e.begin(), b.e.end());
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (size_t i = 0; i < r.e.size(); ++i) r.e[i] += b.e[i];
    return r;
}

bool mono_divides(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.e.size(); ++i)
        if (a.e[i] > b.e[i]) return false;
    return true;
}

std::vector<int> mono_support(const Monomial& m) {
    std::vector<int> s;
    for (size_t i = 0; i < m.e.size(); ++i)
        if (m.e[i] > 0) s.push_back(static_cast<int>(i));
    return s;
}

bool supports_disjoint(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.e.size(); ++i)
        if (a.e[i] > 0 && b.e[i] > 0) return false;
    return true;
}

GradedAlgebra::GradedAlgebra(Scalar p, std::vector<std::string> vars, std::vector<Monomial> relations)
    : fld_(p), vars_(std::move(vars)), artinian_(false), top_degree_(-1) {
    if (vars_.empty()) throw std::invalid_argument("algebra needs at least one variable");
    for (size_t i = 0; i < vars_.size(); ++i) {
        if (vars_[i].empty()) throw std::invalid_argument("empty variable name");
        for (size_t j = i + 1; j < vars_.size(); ++j)
            if (vars_[i] == vars_[j]) throw std::invalid_argument("duplicate variable name: " + vars_[i]);
    }
    for (const Monomial& m : relations) {
        if (m.e.size() != vars_.size()) throw std::invalid_argument("relation has wrong variable count");
        if (m.is_constant()) throw std::invalid_argument("constant monomial cannot be a relation");
    }
    // Minimalize: keep only relations not divisible by another relation.
    for (size_t i = 0; i < relations.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < relations.size() && !redundant; ++j) {
            if (i == j) continue;
            if (relations[j] == relations[i] && j < i) redundant = true;  // exact duplicate
            else if (!(relations[j] == relations[i]) && mono_divides(relations[j], relations[i]))
                redundant = true;
        }
        if (!redundant) rels_.push_back(relations[i]);
    }
    std::sort(rels_.begin(), rels_.end(), [](const Monomial& a, const Monomial& b) { return lex_less(b, a); });

    // Artinian iff each variable has a pure-power relation.
    artinian_ = true;
    for (int v = 0; v < nvars() && artinian_; ++v) {
        bool pure = false;
        for (const Monomial& m : rels_) {
            auto s = mono_support(m);
            if (s.size() == 1 && s[0] == v) { pure = true; break; }
        }
        artinian_ = pure;
    }
    if (artinian_) {
        int d = 0;
        // Monomials outside a monomial ideal are closed under division, so
        // once a degree has empty basis all higher degrees do too.
        while (piece_dim(d + 1) > 0) ++d;
        top_degree_ = d;
    }
}

bool GradedAlgebra::in_ideal(const Monomial& m) const {
    for (const Monomial& r : rels_)
        if (mono_divides(r, m)) return true;
    return false;
}

std::vector<Monomial> GradedAlgebra::basis(int d) const {
    std::vector<Monomial> out;
    if (d < 0) return out;
    Monomial cur;
    cur.e.assign(nvars(), 0);
    std::function<void(int, int)> rec = [&](int var, int remaining) {
        if (var == nvars() - 1) {
            cur.e[var] = remaining;
            if (!in_ideal(cur)) out.push_back(cur);
            cur.e[var] = 0;
            return;
        }
        for (int k = remaining; k >= 0; --k) {  // descending lex
            cur.e[var] = k;
            rec(var + 1, remaining - k);
        }
        cur.e[var] = 0;
    };
    rec(0, d);
    return out;
}

int GradedAlgebra::top_degree() const {
    if (!artinian_) throw std::logic_error("top_degree: algebra is not artinian");
    return top_degree_;
}

bool GradedAlgebra::is_complete_intersection() const {
    for (size_t i = 0; i < rels_.size(); ++i)
        for (size_t j = i + 1; j < rels_.size(); ++j)
            if (!supports_disjoint(rels_[i], rels_[j])) return false;
    return true;
}

bool GradedAlgebra::same_as(const GradedAlgebra& o) const {
    return fld_ == o.fld_ && vars_ == o.vars_ &&
           [&] {
               if (rels_.size() != o.rels_.size()) return false;
               for (size_t i = 0; i < rels_.size(); ++i)
                   if (!(rels_[i] == o.rels_[i])) return false;
               return true;
           }();
}

static std::string mono_str(const GradedAlgebra& a, const Monomial& m) {
    std::ostringstream os;
    bool first = true;
    for (int v = 0; v < a.nvars(); ++v) {
        if (m.e[v] == 0) continue;
        if (!first) os << "*";
        os << a.vars()[v];
        if (m.e[v] > 1) os << "^" << m.e[v];
        first = false;
    }
    if (first) os << "1";
    return os.str();
}

std::string GradedAlgebra::describe() const {
    std::ostringstream os;
    os << "GF(" << characteristic() << ")[";
    for (size_t i = 0; i < vars_.size(); ++i) os << (i ? "," : "") << vars_[i];
    os << "]";
    if (!rels_.empty()) {
        os << "/(";
        for (size_t i = 0; i < rels_.size(); ++i) os << (i ? ", " : "") << mono_str(*this, rels_[i]);
        os << ")";
    }
    return os.str();
}

AlgebraPtr make_algebra(Scalar p, std::vector<std::string> vars, std::vector<Monomial> relations) {
    return std::make_shared<const GradedAlgebra>(p, std::move(vars), std::move(relations));
}

void require_same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
    if (!a || !b) throw std::logic_error("element without algebra");
    if (a.get() == b.get()) return;
    if (!a->same_as(*b)) throw std::invalid_argument("mixed algebras in one operation");
}

RingElem RingElem::normal_form(AlgebraPtr a, std::vector<Term> raw) {
    RingElem r(a);
    const PrimeField& f = a->field();
    std::vector<Term> kept;
    for (Term& t : raw) {
        t.c %= f.characteristic();
        if (t.c == 0) continue;
        if (static_cast<int>(t.m.e.size()) != a->nvars())
            throw std::invalid_argument("monomial has wrong variable count");
        if (a->in_ideal(t.m)) continue;
        kept.push_back(t);
    }
    std::sort(kept.begin(), kept.end(), [](const Term& x, const Term& y) { return lex_less(y.m, x.m); });
    for (const Term& t : kept) {
        if (!r.terms_.empty() && r.terms_.back().m == t.m)
            r.terms_.back().c = f.add(r.terms_.back().c, t.c);
        else
            r.terms_.push_back(t);
    }
    r.terms_.erase(std::remove_if(r.terms_.begin(), r.terms_.end(),
                                  [](const Term& t) { return t.c == 0; }),
                   r.terms_.end());
    return r;
}

RingElem RingElem::unit(AlgebraPtr a) {
    Monomial one;
    one.e.assign(a->nvars(), 0);
    return monomial(std::move(a), one, 1);
}

RingElem RingElem::variable(AlgebraPtr a, int i) {
    Monomial m;
    m.e.assign(a->nvars(), 0);
    m.e[i] = 1;
    return monomial(std::move(a), m, 1);
}

RingElem RingElem::monomial(AlgebraPtr a, const Monomial& m, Scalar c) {
    return normal_form(std::move(a), {Term{m, c}});
}

bool RingElem::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = terms_.front().m.degree();
    for (const Term& t : terms_)
        if (t.m.degree() != d) return false;
    return true;
}

int RingElem::degree_or(int dflt) const {
    return terms_.empty() ? dflt : terms_.front().m.degree();
}

RingElem RingElem::operator+(const RingElem& o) const {
    require_same_algebra(alg_, o.alg_);
    std::vector<Term> raw = terms_;
    raw.insert(raw.end(), o.terms_.begin(), o.terms_.end());
    return normal_form(alg_, std::move(raw));
}

RingElem RingElem::operator-() const {
    RingElem r = *this;
    for (Term& t : r.terms_) t.c = alg_->field().neg(t.c);
    return r;
}

RingElem RingElem::operator-(const RingElem& o) const { return *this + (-o); }

RingElem RingElem::operator*(const RingElem& o) const {
    require_same_algebra(alg_, o.alg_);
    std::vector<Term> raw;
    raw.reserve(terms_.size() * o.terms_.size());
    const PrimeField& f = alg_->field();
    for (const Term& s : terms_)
        for (const Term& t : o.terms_)
            raw.push_back(Term{mono_mul(s.m, t.m), f.mul(s.c, t.c)});
    return normal_form(alg_, std::move(raw));
}

RingElem RingElem::scale(Scalar c) const {
    std::vector<Term> raw = terms_;
    const PrimeField& f = alg_->field();
    for (Term& t : raw) t.c = f.mul(t.c, c % f.characteristic());
    return normal_form(alg_, std::move(raw));
}

RingElem RingElem::times_mono(const Monomial& m) const {
    std::vector<Term> raw = terms_;
    for (Term& t : raw) t.m = mono_mul(t.m, m);
    return normal_form(alg_, std::move(raw));
}

bool RingElem::operator==(const RingElem& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
        if (!(terms_[i].m == o.terms_[i].m) || terms_[i].c != o.terms_[i].c) return false;
    return true;
}

Scalar RingElem::constant_coeff() const {
    for (const Term& t : terms_)
        if (t.m.is_constant()) return t.c;
    return 0;
}

bool is_monomial_regular_sequence(int ambient_nvars, const std::vector<Monomial>& seq) {
    for (const Monomial& m : seq) {
        if (static_cast<int>(m.e.size()) != ambient_nvars)
            throw std::invalid_argument("sequence monomial has wrong variable count");
        if (m.is_constant())
            throw std::invalid_argument("constant monomial in candidate regular sequence");
    }
    for (size_t i = 0; i < seq.size(); ++i)
        for (size_t j = i + 1; j < seq.size(); ++j)
            if (!supports_disjoint(seq[i], seq[j])) return false;
    return true;
}

bool is_monomial_regular_sequence(const GradedAlgebra& q, const std::vector<Monomial>& seq) {
    if (!is_monomial_regular_sequence(q.nvars(), seq)) return false;
    for (const Monomial& m : seq)
        for (const Monomial& r : q.relations())
            if (!supports_disjoint(m, r)) return false;
    return true;
}

}  // namespace cidim
