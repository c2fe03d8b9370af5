#include "exclusion/io.hpp"

#include <fstream>
#include <sstream>

namespace exclusion::io {

namespace {

json complex_to_json(const cplx& z) { return json::array({z.real(), z.imag()}); }

cplx complex_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2)
        throw InvalidState("complex entries must be [re, im] pairs");
    return {j[0].get<double>(), j[1].get<double>()};
}

}  // namespace

json matrix_to_json(const CMatrix& m) {
    json rows = json::array();
    for (int r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

CMatrix matrix_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw InvalidState("matrix must be a non-empty array of rows");
    const int rows = static_cast<int>(j.size());
    const int cols = static_cast<int>(j[0].size());
    CMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r) {
        if (static_cast<int>(j[r].size()) != cols) throw InvalidState("ragged matrix rows");
        for (int c = 0; c < cols; ++c) m(r, c) = complex_from_json(j[r][c]);
    }
    return m;
}

json stateset_to_json(const StateSet& set) {
    json states = json::array();
    for (const auto& psi : set.states) {
        json v = json::array();
        for (const auto& amp : psi) v.push_back(complex_to_json(amp));
        states.push_back(std::move(v));
    }
    return json{{"dim", set.dim}, {"states", std::move(states)}};
}

StateSet stateset_from_json(const json& j) {
    StateSet set;
    set.dim = j.at("dim").get<int>();
    for (const auto& v : j.at("states")) {
        std::vector<cplx> psi;
        psi.reserve(v.size());
        for (const auto& amp : v) psi.push_back(complex_from_json(amp));
        set.states.push_back(std::move(psi));
    }
    set.validate();
    return set;
}

json povm_to_json(const Povm& p) {
    json elements = json::array();
    for (const CMatrix& e : p.elements) elements.push_back(matrix_to_json(e));
    return json{{"dim", p.dim}, {"elements", std::move(elements)}};
}

Povm povm_from_json(const json& j) {
    Povm p;
    p.dim = j.at("dim").get<int>();
    for (const auto& e : j.at("elements")) p.elements.push_back(matrix_from_json(e));
    return p;
}

namespace {

json certificate_to_json(const Certificate& c) {
    if (std::holds_alternative<Decomposition>(c)) {
        const auto& d = std::get<Decomposition>(c);
        json blocks = json::array();
        for (const CMatrix& f : d.blocks) blocks.push_back(matrix_to_json(f));
        return json{{"type", "decomposition"}, {"blocks", std::move(blocks)}, {"residual", d.residual}};
    }
    if (std::holds_alternative<InfeasibilityCertificate>(c)) {
        const auto& w = std::get<InfeasibilityCertificate>(c);
        return json{{"type", "infeasibility"}, {"H", matrix_to_json(w.h)}, {"violation", w.violation}};
    }
    if (std::holds_alternative<std::vector<double>>(c)) {
        return json{{"type", "mixture"}, {"t", std::get<std::vector<double>>(c)}};
    }
    return nullptr;
}

}  // namespace

json verdict_to_json(const Verdict& v, int copies) {
    json trail = json::array();
    for (const auto& [criterion, decision] : v.trail)
        trail.push_back(json{{"criterion", criterion}, {"decision", to_string(decision)}});
    return json{{"decision", to_string(v.decision)},
                {"criterion", v.criterion},
                {"margin", v.margin},
                {"borderline", v.borderline},
                {"copies", copies},
                {"certificate", certificate_to_json(v.certificate)},
                {"trail", std::move(trail)}};
}

json copy_report_to_json(const CopyReport& r) {
    json trail = json::array();
    for (const auto& [n, v] : r.trail)
        trail.push_back(json{{"copies", n}, {"decision", to_string(v.decision)}, {"criterion", v.criterion}});
    json j{{"method", r.method}, {"trail", std::move(trail)}};
    j["minimal_N"] = r.minimal_n ? json(*r.minimal_n) : json(nullptr);
    j["upper_bound"] = r.upper_bound ? json(*r.upper_bound) : json(nullptr);
    return j;
}

StateSet load_stateset(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open state-set file: " + path);
    json j;
    in >> j;
    return stateset_from_json(j);
}

Povm load_povm(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open POVM file: " + path);
    json j;
    in >> j;
    return povm_from_json(j);
}

void save_json(const json& j, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write file: " + path);
    out << j.dump(2) << '\n';
}

std::string sweep_to_csv(const std::vector<SweepRow>& rows) {
    std::ostringstream os;
    os << "theta,x,N\n";
    os.precision(10);
    for (const SweepRow& r : rows) os << r.theta << ',' << r.x << ',' << r.n << '\n';
    return os.str();
}

}  // namespace exclusion::io
