#include "sqlab/report.hpp"

#include <sstream>

namespace sqlab {

Json to_json(const Factorization& f)
{
    Json terms = Json::array();
    for (const auto& t : f.terms)
        terms.push_back({{"coefficient", to_string(t.coefficient)}, {"right_square", t.right_square}});
    return {{"label", f.label}, {"target_degree", f.target_degree}, {"terms", std::move(terms)}};
}

Json to_json(const BoundReport& r)
{
    Json verdicts = Json::array();
    for (const auto& v : r.verdicts) {
        Json row{{"k", v.k}, {"indeterminacy_zero", v.zero}};
        if (v.witness) {
            row["witness"] = {{"term", v.witness->term},
                              {"coefficient", to_string(v.witness->coefficient)},
                              {"right_square", v.witness->right_square},
                              {"class", v.witness->class_name},
                              {"class_degree", v.witness->class_degree}};
        } else {
            row["witness"] = nullptr;
        }
        verdicts.push_back(std::move(row));
    }
    return {{"sphere", "S^" + std::to_string(r.sphere_dim)},
            {"sphere_dim", r.sphere_dim},
            {"relation", r.relation.label},
            {"relation_text", r.relation_text},
            {"factorization", to_json(r.relation)},
            {"verdicts", std::move(verdicts)},
            {"max_vanishing_k", r.max_vanishing_k},
            {"contiguous", r.contiguous},
            {"bound", r.lower_bound}};
}

Json to_json(const TheoremOneReport& r)
{
    return {{"t", r.t},
            {"required", r.required},
            {"part1", to_json(r.part1)},
            {"part2", to_json(r.part2)},
            {"holds", r.part1.lower_bound >= r.required && r.part2.lower_bound >= r.required}};
}

Json to_json(const DistinguishReport& r)
{
    return {{"n", r.n},
            {"q", r.q},
            {"loops", r.loops},
            {"sphere_dim", r.sphere_dim},
            {"degree", r.degree},
            {"square", "Sq^" + std::to_string(r.square_index) + "_*"},
            {"deg2",
             {{"primitive", to_string(r.deg2_primitive)},
              {"coefficient", r.deg2_coefficient ? 1 : 0},
              {"value", to_string(r.deg2_value)}}},
            {"psi",
             {{"primitive", to_string(r.psi_primitive)},
              {"gamma_image", to_string(r.gamma_image)},
              {"coefficient", r.qpsi_coefficient ? 1 : 0},
              {"value", to_string(r.qpsi_value)}}},
            {"verdict", r.modules_differ ? "differ" : "undecided"},
            {"assumptions", r.assumptions}};
}

std::string to_text(const BoundReport& r)
{
    std::ostringstream os;
    os << "sphere: S^" << r.sphere_dim << '\n';
    os << "relation: " << r.relation.label << '\n';
    os << "factorization: Sq" << r.relation.target_degree << " = " << r.relation_text << '\n';
    for (const auto& v : r.verdicts) {
        os << "  k=" << v.k << ": indeterminacy " << (v.zero ? "zero" : "nonzero");
        if (v.witness)
            os << " (" << to_string(v.witness->coefficient) << " on " << v.witness->class_name << " in degree "
               << v.witness->class_degree << ")";
        os << '\n';
    }
    os << "max vanishing k: " << r.max_vanishing_k << (r.contiguous ? "" : " (non-contiguous scan)") << '\n';
    os << "bound: k >= " << r.lower_bound << '\n';
    return os.str();
}

std::string to_text(const TheoremOneReport& r)
{
    std::ostringstream os;
    os << "t = " << r.t << ", required bound 2^t + 1 = " << r.required << '\n';
    os << "part 1: S^" << r.part1.sphere_dim << " via " << r.part1.relation.label << ": k >= " << r.part1.lower_bound
       << '\n';
    os << "part 2: S^" << r.part2.sphere_dim << " via " << r.part2.relation.label << ": k >= " << r.part2.lower_bound
       << '\n';
    const bool holds = r.part1.lower_bound >= r.required && r.part2.lower_bound >= r.required;
    os << (holds ? "holds" : "FAILS") << '\n';
    return os.str();
}

std::string to_text(const DistinguishReport& r)
{
    std::ostringstream os;
    os << "loops k = " << r.loops << ", sphere S^" << r.sphere_dim << " (n=" << r.n << ", q=" << r.q << ")\n";
    os << "distinguished degree: " << r.degree << '\n';
    os << "[2] fibre: primitive " << to_string(r.deg2_primitive) << ", Sq^" << r.square_index
       << "_* = " << to_string(r.deg2_value) << " (coefficient " << (r.deg2_coefficient ? 1 : 0) << ")\n";
    os << "Psi fibre: primitive " << to_string(r.psi_primitive) << ", gamma_* = " << to_string(r.gamma_image)
       << ", Sq^" << r.square_index << "_* gamma_* = " << to_string(r.qpsi_value) << " (coefficient "
       << (r.qpsi_coefficient ? 1 : 0) << ")\n";
    os << "assumptions:\n";
    for (const auto& a : r.assumptions)
        os << "  " << a << '\n';
    os << "verdict: " << (r.modules_differ ? "modules differ" : "undecided") << '\n';
    return os.str();
}

}  // namespace sqlab
