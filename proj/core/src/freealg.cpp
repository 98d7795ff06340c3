#include "grassten/freealg.hpp"

#include <algorithm>
#include <stdexcept>

namespace grassten {

std::string word_str(const Word& w) {
    if (w.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += "*";
        s += w[i].str();
    }
    return s;
}

MultiDegree word_multidegree(const Word& w) {
    MultiDegree d;
    for (const Variable& v : w) ++d[v];
    return d;
}

GradedPolynomial GradedPolynomial::constant(const Scalar& c) {
    GradedPolynomial f;
    f.add_term({}, c);
    return f;
}

GradedPolynomial GradedPolynomial::variable(Variable v) { return word({v}); }

GradedPolynomial GradedPolynomial::word(const Word& w, Scalar c) {
    GradedPolynomial f;
    f.add_term(w, c);
    return f;
}

void GradedPolynomial::add_term(const Word& w, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

GradedPolynomial& GradedPolynomial::operator+=(const GradedPolynomial& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

GradedPolynomial& GradedPolynomial::operator-=(const GradedPolynomial& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
}

GradedPolynomial GradedPolynomial::operator-() const {
    GradedPolynomial r;
    for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
    return r;
}

GradedPolynomial& GradedPolynomial::operator*=(const Scalar& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, v] : terms_) v *= c;
    return *this;
}

GradedPolynomial operator*(const GradedPolynomial& a, const GradedPolynomial& b) {
    GradedPolynomial r;
    for (const auto& [w1, c1] : a.terms()) {
        for (const auto& [w2, c2] : b.terms()) {
            Word w = w1;
            w.insert(w.end(), w2.begin(), w2.end());
            r.add_term(w, c1 * c2);
        }
    }
    return r;
}

std::set<Variable> GradedPolynomial::variables() const {
    std::set<Variable> vs;
    for (const auto& [w, c] : terms_)
        for (const Variable& v : w) vs.insert(v);
    return vs;
}

bool GradedPolynomial::is_multihomogeneous() const {
    if (terms_.empty()) return true;
    MultiDegree d = word_multidegree(terms_.begin()->first);
    for (const auto& [w, c] : terms_)
        if (word_multidegree(w) != d) return false;
    return true;
}

MultiDegree GradedPolynomial::multidegree() const {
    if (terms_.empty()) throw std::domain_error("multidegree of zero polynomial");
    if (!is_multihomogeneous()) throw std::domain_error("polynomial is not multihomogeneous");
    return word_multidegree(terms_.begin()->first);
}

bool GradedPolynomial::is_multilinear() const {
    if (terms_.empty()) return true;
    if (!is_multihomogeneous()) return false;
    for (const auto& [v, d] : multidegree())
        if (d != 1) return false;
    return true;
}

unsigned GradedPolynomial::total_degree() const {
    unsigned d = 0;
    for (const auto& [w, c] : terms_) d = std::max(d, static_cast<unsigned>(w.size()));
    return d;
}

GradedPolynomial GradedPolynomial::substitute(Variable v, const GradedPolynomial& image) const {
    GradedPolynomial out;
    for (const auto& [w, c] : terms_) {
        GradedPolynomial acc = GradedPolynomial::constant(c);
        Word pending;
        for (const Variable& x : w) {
            if (x == v) {
                if (!pending.empty()) {
                    acc = acc * GradedPolynomial::word(pending);
                    pending.clear();
                }
                acc = acc * image;
            } else {
                pending.push_back(x);
            }
        }
        if (!pending.empty()) acc = acc * GradedPolynomial::word(pending);
        out += acc;
    }
    return out;
}

std::string GradedPolynomial::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        std::string coef = c.str();
        bool neg = !coef.empty() && coef[0] == '-';
        if (first) {
            s += neg ? "-" : "";
            first = false;
        } else {
            s += neg ? " - " : " + ";
        }
        std::string mag = neg ? coef.substr(1) : coef;
        if (w.empty()) {
            s += mag;
        } else if (mag == "1") {
            s += word_str(w);
        } else {
            s += mag + "*" + word_str(w);
        }
    }
    return s;
}

GradedPolynomial poly_commutator(const GradedPolynomial& a, const GradedPolynomial& b) {
    return a * b - b * a;
}

GradedPolynomial poly_jordan(const GradedPolynomial& a, const GradedPolynomial& b) {
    return a * b + b * a;
}

GradedPolynomial poly_pow(const GradedPolynomial& a, unsigned e) {
    GradedPolynomial r = GradedPolynomial::constant(Scalar::one());
    for (unsigned i = 0; i < e; ++i) r = r * a;
    return r;
}

std::vector<GradedPolynomial> multihomogeneous_components(const GradedPolynomial& f) {
    std::map<MultiDegree, GradedPolynomial> parts;
    for (const auto& [w, c] : f.terms()) parts[word_multidegree(w)].add_term(w, c);
    std::vector<GradedPolynomial> out;
    out.reserve(parts.size());
    for (auto& [d, g] : parts) out.push_back(std::move(g));
    return out;
}

Linearization multilinearize(const GradedPolynomial& f) {
    if (f.is_zero()) return {f, {}};
    MultiDegree deg = f.multidegree();

    // Fresh indices above everything in use, one block per linearized variable.
    std::uint32_t next[2] = {1, 1};
    for (const auto& [v, d] : deg) {
        std::uint32_t& n = next[v.is_even() ? 0 : 1];
        n = std::max(n, v.index + 1);
    }
    Linearization lin;
    for (const auto& [v, d] : deg) {
        if (d < 2) continue;
        std::uint32_t& n = next[v.is_even() ? 0 : 1];
        std::vector<Variable> copies;
        for (unsigned i = 0; i < d; ++i) copies.push_back(Variable{v.parity, n++});
        lin.copies.emplace(v, std::move(copies));
    }

    for (const auto& [w, c] : f.terms()) {
        // Distribute, per variable, its occurrences over the copies in all
        // bijective ways.
        std::vector<Word> expansion{w};
        for (const auto& [v, copies] : lin.copies) {
            std::vector<std::size_t> occ;
            for (std::size_t i = 0; i < w.size(); ++i)
                if (w[i] == v) occ.push_back(i);
            std::vector<unsigned> perm(occ.size());
            for (unsigned i = 0; i < perm.size(); ++i) perm[i] = i;
            std::vector<Word> next_exp;
            do {
                for (const Word& base : expansion) {
                    Word u = base;
                    for (std::size_t i = 0; i < occ.size(); ++i) u[occ[i]] = copies[perm[i]];
                    next_exp.push_back(std::move(u));
                }
            } while (std::next_permutation(perm.begin(), perm.end()));
            expansion = std::move(next_exp);
        }
        for (const Word& u : expansion) lin.poly.add_term(u, c);
    }
    return lin;
}

namespace {

// f with every occurrence of y replaced by y + 1; cheaper than the generic
// substitute since each word just splits over kept/dropped occurrences.
GradedPolynomial shift_even(const GradedPolynomial& f, Variable y) {
    GradedPolynomial out;
    for (const auto& [w, c] : f.terms()) {
        std::vector<std::size_t> occ;
        for (std::size_t i = 0; i < w.size(); ++i)
            if (w[i] == y) occ.push_back(i);
        if (occ.empty()) {
            out.add_term(w, c);
            continue;
        }
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << occ.size()); ++mask) {
            Word u;
            u.reserve(w.size());
            std::size_t next_occ = 0;
            for (std::size_t i = 0; i < w.size(); ++i) {
                if (next_occ < occ.size() && occ[next_occ] == i) {
                    if ((mask >> next_occ) & 1) u.push_back(w[i]);
                    ++next_occ;
                } else {
                    u.push_back(w[i]);
                }
            }
            out.add_term(u, c);
        }
    }
    return out;
}

}  // namespace

bool is_Y_proper(const GradedPolynomial& f) {
    for (const Variable& v : f.variables()) {
        if (!v.is_even()) continue;
        if (shift_even(f, v) != f) return false;
    }
    return true;
}

TensorElement eval(const GradedPolynomial& f, const std::map<Variable, TensorElement>& images) {
    TensorElement out;
    for (const auto& [w, c] : f.terms()) {
        TensorElement acc = TensorElement::basis(BasisElement::unit(), c);
        for (const Variable& v : w) {
            auto it = images.find(v);
            if (it == images.end())
                throw std::invalid_argument("no image for variable " + v.str());
            acc = acc * it->second;
            if (acc.is_zero()) break;
        }
        out += acc;
    }
    return out;
}

}  // namespace grassten
