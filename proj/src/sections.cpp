#include "syzygy/sections.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "json.hpp"

namespace syzygy {

size_t SectionSpace::ambient_index(const Expo& e) const {
    if (amb_ == Ambient::P1xP1) {
        // basis order: (i,j) = (x1-exp, y1-exp), row-major in j
        return static_cast<size_t>(e[1]) * (twist_.n + 1) + e[3];
    }
    // P2 order: e0 descending, then e1 descending
    int d = twist_.m, e0 = e[0], e1 = e[1];
    size_t off = 0;
    for (int a = d; a > e0; --a) off += static_cast<size_t>(d - a) + 1;
    return off + static_cast<size_t>(d - e0 - e1);
}

std::vector<std::pair<uint32_t, uint32_t>> SectionSpace::reduce_monomial(const FpField& F,
                                                                         size_t amb_idx) const {
    std::vector<std::pair<uint32_t, uint32_t>> out;
    int pr = relations_.col_pivot.empty() ? -1 : relations_.col_pivot[amb_idx];
    if (pr < 0) {
        // locate in complement (ascending, binary search)
        auto it = std::lower_bound(complement_.begin(), complement_.end(),
                                   static_cast<int>(amb_idx));
        out.emplace_back(static_cast<uint32_t>(it - complement_.begin()), 1u);
        return out;
    }
    const auto& row = relations_.rows[pr];
    for (size_t j = 0; j < complement_.size(); ++j) {
        uint32_t v = row[complement_[j]];
        if (v) out.emplace_back(static_cast<uint32_t>(j), F.neg(v));
    }
    return out;
}

std::vector<uint32_t> SectionSpace::reduce_form(const FpField& F, const MultiForm& f) const {
    if (!(f.deg == twist_) || f.amb != amb_)
        throw std::invalid_argument("reduce_form: twist mismatch");
    std::vector<uint32_t> out(dim(), 0);
    for (auto& [e, v] : f.coeff) {
        for (auto& [idx, w] : reduce_monomial(F, ambient_index(e)))
            out[idx] = F.add(out[idx], F.mul(v, w));
    }
    return out;
}

SectionSpace section_space(const FpField& F, const CurveModel& C, Twist twist) {
    if (twist.m < 0 || (C.amb == Ambient::P1xP1 && twist.n < 0))
        throw std::invalid_argument("section_space: twist has negative ambient degree");
    Twist rel = C.amb == Ambient::P1xP1 ? twist - C.deg : Twist{twist.m - C.deg.m, 0};
    if (C.amb == Ambient::P1xP1) {
        bool h1 = (rel.m >= 0 && rel.n <= -2) || (rel.m <= -2 && rel.n >= 0);
        if (h1)
            throw std::invalid_argument(
                "section_space: ambient H^1(O(" + std::to_string(rel.m) + "," +
                std::to_string(rel.n) + ")) != 0; quotient formula invalid for this twist");
    }
    SectionSpace S;
    S.amb_ = C.amb;
    S.twist_ = twist;
    S.ambient_basis_ = monomial_basis(C.amb, twist);

    auto rel_basis = monomial_basis(C.amb, rel);
    SparseMat relation_rows(rel_basis.size(), S.ambient_basis_.size());
    for (size_t r = 0; r < rel_basis.size(); ++r) {
        MultiForm prod = multiply(F, monomial_form(C.amb, rel, rel_basis[r]), C.F);
        std::vector<SparseMat::Entry> row;
        for (auto& [e, v] : prod.coeff)
            row.emplace_back(static_cast<uint32_t>(S.ambient_index(e)), v);
        std::sort(row.begin(), row.end());
        relation_rows.set_row(r, std::move(row));
    }
    S.relations_ = rref(F, relation_rows);
    if (S.relations_.rank != rel_basis.size())
        throw std::runtime_error("section_space: relation rows dependent (F has a factor?)");
    for (size_t c = 0; c < S.ambient_basis_.size(); ++c)
        if (S.relations_.col_pivot.empty() || S.relations_.col_pivot[c] < 0)
            S.complement_.push_back(static_cast<int>(c));
    return S;
}

MultTensor mult_tensor(const FpField& F, const SectionSpace& s1, const SectionSpace& s2,
                       const SectionSpace& target) {
    MultTensor T;
    T.t1 = s1.twist();
    T.t2 = s2.twist();
    T.target = target.twist();
    T.dim1 = s1.dim();
    T.dim2 = s2.dim();
    T.target_dim = target.dim();
    T.entry.assign(T.dim1, std::vector<std::vector<std::pair<uint32_t, uint32_t>>>(T.dim2));
    for (size_t i = 0; i < T.dim1; ++i) {
        const Expo& a = s1.ambient_basis()[s1.complement()[i]];
        for (size_t j = 0; j < T.dim2; ++j) {
            const Expo& b = s2.ambient_basis()[s2.complement()[j]];
            Expo e{static_cast<int16_t>(a[0] + b[0]), static_cast<int16_t>(a[1] + b[1]),
                   static_cast<int16_t>(a[2] + b[2]), static_cast<int16_t>(a[3] + b[3])};
            T.entry[i][j] = target.reduce_monomial(F, target.ambient_index(e));
        }
    }
    return T;
}

MultTensor mult_tensor(const FpField& F, const CurveModel& C, Twist t1, Twist t2) {
    SectionSpace s1 = section_space(F, C, t1);
    SectionSpace s2 = section_space(F, C, t2);
    SectionSpace st = section_space(F, C, t1 + t2);
    return mult_tensor(F, s1, s2, st);
}

bool type_I_check(const FpField& F, const CurveModel& C, const Pencil& pencil) {
    if (C.amb != Ambient::P1xP1)
        throw std::invalid_argument("type_I_check: pencils are ruling projections on P1xP1");
    Twist lt = C.pencil_twist(pencil);
    if (!((lt == Twist{1, 0}) || (lt == Twist{0, 1})))
        throw std::invalid_argument("type_I_check: not a ruling pencil twist");
    SectionSpace sq = section_space(F, C, lt * 2);
    return sq.dim() == 3;
}

MultTensor cached_mult_tensor(const FpField& F, const CurveModel& C, Twist t1, Twist t2,
                              const std::string& cache_dir) {
    if (cache_dir.empty()) return mult_tensor(F, C, t1, t2);
    std::ostringstream name;
    name << cache_dir << "/tensor_" << std::hex << C.content_hash() << std::dec << "_"
         << t1.m << "_" << t1.n << "_" << t2.m << "_" << t2.n << ".json";
    std::ifstream in(name.str());
    if (in) {
        nlohmann::json j = nlohmann::json::parse(in);
        MultTensor T;
        T.t1 = t1;
        T.t2 = t2;
        T.target = t1 + t2;
        T.dim1 = j.at("dim1");
        T.dim2 = j.at("dim2");
        T.target_dim = j.at("target_dim");
        T.entry.assign(T.dim1, std::vector<std::vector<std::pair<uint32_t, uint32_t>>>(T.dim2));
        size_t idx = 0;
        for (auto& cell : j.at("entries")) {
            size_t i = idx / T.dim2, jj = idx % T.dim2;
            ++idx;
            for (auto& pr : cell)
                T.entry[i][jj].emplace_back(static_cast<uint32_t>(pr.at(0)),
                                            static_cast<uint32_t>(pr.at(1)));
        }
        return T;
    }
    MultTensor T = mult_tensor(F, C, t1, t2);
    nlohmann::json j;
    j["dim1"] = T.dim1;
    j["dim2"] = T.dim2;
    j["target_dim"] = T.target_dim;
    auto cells = nlohmann::json::array();
    for (auto& rowv : T.entry)
        for (auto& cell : rowv) {
            auto c = nlohmann::json::array();
            for (auto& [t, v] : cell) c.push_back({t, v});
            cells.push_back(c);
        }
    j["entries"] = cells;
    std::ofstream out(name.str());
    if (out) out << j.dump();
    return T;
}

} // namespace syzygy
