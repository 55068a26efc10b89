#include "qcharrel/algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace qcr {

char type_letter(LieType t) {
    switch (t) {
        case LieType::A: return 'A';
        case LieType::B: return 'B';
        case LieType::C: return 'C';
        case LieType::D: return 'D';
    }
    throw std::logic_error("bad LieType");
}

LieType type_from_letter(char c) {
    switch (c) {
        case 'A': case 'a': return LieType::A;
        case 'B': case 'b': return LieType::B;
        case 'C': case 'c': return LieType::C;
        case 'D': case 'd': return LieType::D;
    }
    throw std::invalid_argument(std::string("unknown type letter: ") + c);
}

std::string box_str(BoxIndex j) {
    if (j == 0) return "0";
    if (j > 0) return std::to_string(j);
    return std::to_string(-j) + "b";
}

BoxIndex box_parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty box index");
    if (s == "0") return 0;
    bool barred = s.back() == 'b';
    std::string digits = barred ? s.substr(0, s.size() - 1) : s;
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("bad box index: " + s);
    int v = std::stoi(digits);
    if (v == 0) throw std::invalid_argument("bad box index: " + s);
    return barred ? -v : v;
}

std::string tuple_str(const std::vector<BoxIndex>& J) {
    std::string out = "(";
    for (size_t i = 0; i < J.size(); ++i) {
        if (i) out += ",";
        out += box_str(J[i]);
    }
    return out + ")";
}

std::vector<BoxIndex> tuple_parse(const std::string& s) {
    std::string body = s;
    if (!body.empty() && body.front() == '(') {
        if (body.back() != ')') throw std::invalid_argument("bad tuple: " + s);
        body = body.substr(1, body.size() - 2);
    }
    std::vector<BoxIndex> out;
    size_t pos = 0;
    while (pos < body.size()) {
        size_t comma = body.find(',', pos);
        if (comma == std::string::npos) comma = body.size();
        out.push_back(box_parse(body.substr(pos, comma - pos)));
        pos = comma + 1;
    }
    return out;
}

AlgebraContext::AlgebraContext(LieType type, int rank) : type_(type), rank_(rank) {
    int minRank = 1;
    if (type == LieType::B) minRank = 2;
    if (type == LieType::C) minRank = 2;
    if (type == LieType::D) minRank = 3;
    if (rank < minRank) throw std::invalid_argument("rank too small for type " +
                                                    std::string(1, type_letter(type)));
    switch (type) {
        case LieType::A:
            num_x_ = rank + 1;
            dual_coxeter_ = rank + 1;
            for (int i = 1; i <= rank + 1; ++i) index_set_.push_back(i);
            break;
        case LieType::B:
            num_x_ = rank;
            dual_coxeter_ = 2 * rank - 1;
            for (int i = 1; i <= rank; ++i) index_set_.push_back(i);
            for (int i = rank; i >= 1; --i) index_set_.push_back(-i);
            break;
        case LieType::C:
            num_x_ = rank;
            dual_coxeter_ = rank + 1;
            for (int i = 1; i <= rank; ++i) index_set_.push_back(i);
            index_set_.push_back(0);
            for (int i = rank; i >= 1; --i) index_set_.push_back(-i);
            break;
        case LieType::D:
            num_x_ = rank;
            dual_coxeter_ = 2 * rank - 2;
            for (int i = 1; i <= rank; ++i) index_set_.push_back(i);
            for (int i = rank; i >= 1; --i) index_set_.push_back(-i);
            break;
    }
}

std::string AlgebraContext::name() const {
    return std::string(1, type_letter(type_)) + std::to_string(rank_);
}

int AlgebraContext::dd(int i) const {
    if (i < 1 || i > rank_) throw std::out_of_range("node out of range");
    switch (type_) {
        case LieType::A:
        case LieType::D: return 2;
        case LieType::B: return i < rank_ ? 2 : 1;
        case LieType::C: return i < rank_ ? 1 : 2;
    }
    throw std::logic_error("bad type");
}

int AlgebraContext::canonical_pos(BoxIndex j) const {
    for (size_t p = 0; p < index_set_.size(); ++p)
        if (index_set_[p] == j) return static_cast<int>(p);
    throw std::out_of_range("index " + box_str(j) + " not in " + name());
}

bool AlgebraContext::valid_index(BoxIndex j) const {
    return std::find(index_set_.begin(), index_set_.end(), j) != index_set_.end();
}

bool AlgebraContext::less(BoxIndex a, BoxIndex b) const {
    if (!valid_index(a) || !valid_index(b)) throw std::out_of_range("bad index");
    // Comparison level; in type D level(n) == level(n-bar) == n makes that
    // single pair incomparable, everywhere else levels are distinct.
    auto level = [this](BoxIndex j) -> int {
        switch (type_) {
            case LieType::A: return j;
            case LieType::B: return j > 0 ? j : 2 * rank_ + 1 + j;  // i-bar -> 2n+1-i
            case LieType::C:
                if (j == 0) return rank_ + 1;
                return j > 0 ? j : 2 * rank_ + 2 + j;               // i-bar -> 2n+2-i
            case LieType::D: return j > 0 ? j : 2 * rank_ + j;      // i-bar -> 2n-i
        }
        return 0;
    };
    return level(a) < level(b);
}

bool AlgebraContext::is_increasing(const std::vector<BoxIndex>& J) const {
    for (size_t k = 0; k + 1 < J.size(); ++k)
        if (canonical_pos(J[k]) >= canonical_pos(J[k + 1])) return false;
    for (BoxIndex j : J)
        if (!valid_index(j)) return false;
    return true;
}

std::vector<BoxIndex> AlgebraContext::complement(const std::vector<BoxIndex>& J) const {
    std::vector<BoxIndex> out;
    for (BoxIndex j : index_set_)
        if (std::find(J.begin(), J.end(), j) == J.end()) out.push_back(j);
    return out;
}

std::vector<std::vector<BoxIndex>> AlgebraContext::increasing_tuples(int a) const {
    std::vector<std::vector<BoxIndex>> out;
    int N = static_cast<int>(index_set_.size());
    if (a < 0 || a > N) return out;
    std::vector<int> pick(a);
    // Enumerate positions 0 <= p_0 < ... < p_{a-1} < N.
    auto rec = [&](auto&& self, int depth, int start) -> void {
        if (depth == a) {
            std::vector<BoxIndex> J(a);
            for (int i = 0; i < a; ++i) J[i] = index_set_[pick[i]];
            out.push_back(std::move(J));
            return;
        }
        for (int p = start; p < N; ++p) {
            pick[depth] = p;
            self(self, depth + 1, p + 1);
        }
    };
    rec(rec, 0, 0);
    return out;
}

Rational AlgebraContext::grading_weight(int xvar) const {
    if (xvar < 1 || xvar > num_x_) throw std::out_of_range("x variable out of range");
    switch (type_) {
        case LieType::A: return Rational(rank_ + 1 - xvar);
        case LieType::B: return Rational(rank_ + 1 - xvar);
        case LieType::C: return Rational(2 * (rank_ - xvar) + 1, 2);
        case LieType::D: return xvar <= rank_ - 1 ? Rational(rank_ - xvar) : Rational(0);
    }
    throw std::logic_error("bad type");
}

int c_sign_B(BoxIndex j) {
    if (j == 0) throw std::invalid_argument("c(j) undefined for 0");
    int i = j > 0 ? j : -j;
    int par = j > 0 ? i : i - 1;
    return (par % 2 == 0) ? 1 : -1;
}

int signature(const AlgebraContext& ctx, const std::vector<BoxIndex>& J) {
    std::vector<int> perm;
    for (BoxIndex j : J) perm.push_back(ctx.canonical_pos(j));
    for (BoxIndex j : ctx.complement(J)) perm.push_back(ctx.canonical_pos(j));
    if (perm.size() != ctx.index_set().size())
        throw std::invalid_argument("signature: J must have distinct valid entries");
    long long inv = 0;
    for (size_t i = 0; i < perm.size(); ++i)
        for (size_t k = i + 1; k < perm.size(); ++k)
            if (perm[i] > perm[k]) ++inv;
    return inv % 2 == 0 ? 1 : -1;
}

int signature_by_cycles(const AlgebraContext& ctx, const std::vector<BoxIndex>& J) {
    std::vector<int> perm;
    for (BoxIndex j : J) perm.push_back(ctx.canonical_pos(j));
    for (BoxIndex j : ctx.complement(J)) perm.push_back(ctx.canonical_pos(j));
    int N = static_cast<int>(perm.size());
    std::vector<bool> seen(N, false);
    int sign = 1;
    for (int i = 0; i < N; ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (int k = i; !seen[k]; k = perm[k]) { seen[k] = true; ++len; }
        if (len % 2 == 0) sign = -sign;
    }
    return sign;
}

std::vector<BoxIndex> remove_at(const std::vector<BoxIndex>& J, int k) {
    std::vector<BoxIndex> out;
    for (size_t i = 0; i < J.size(); ++i)
        if (static_cast<int>(i) != k) out.push_back(J[i]);
    return out;
}

std::vector<BoxIndex> prepend(BoxIndex j, const std::vector<BoxIndex>& J) {
    std::vector<BoxIndex> out{j};
    out.insert(out.end(), J.begin(), J.end());
    return out;
}

}  // namespace qcr
