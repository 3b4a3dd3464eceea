#include "birkhoff/io.hpp"

#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace birkhoff {

namespace {

using nlohmann::json;

json complex_to_json(const cplx& v) { return json::array({v.real(), v.imag()}); }

cplx complex_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2) throw std::runtime_error("expected [re, im] pair");
    return {j[0].get<double>(), j[1].get<double>()};
}

json load_json_file(const std::string& path, const char* expected_kind) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
    if (j.value("kind", "") != expected_kind) {
        throw std::runtime_error(path + ": expected kind \"" + expected_kind + "\"");
    }
    return j;
}

void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << j.dump(1) << "\n";
    if (!out) throw std::runtime_error("write failed: " + path);
}

GroupKind kind_from_string(const std::string& s) {
    if (s == "symmetric") return GroupKind::symmetric;
    if (s == "supercirculant") return GroupKind::supercirculant;
    if (s == "epicirculant") return GroupKind::epicirculant;
    throw std::runtime_error("unknown group kind \"" + s + "\"");
}

Strategy strategy_from_string(const std::string& s) {
    if (s == "strategy1") return Strategy::strategy1;
    if (s == "strategy2") return Strategy::strategy2;
    if (s == "structural") return Strategy::structural;
    throw std::runtime_error("unknown strategy \"" + s + "\"");
}

json label_to_json(const GroupElement& el) {
    json j;
    if (const auto* sl = std::get_if<SuperLabel>(&el.label)) {
        j["type"] = "super";
        j["a"] = sl->a;
        j["x"] = sl->x;
    } else if (const auto* el2 = std::get_if<EpiLabel>(&el.label)) {
        j["type"] = "epi";
        j["a_dits"] = el2->a;
        json rows = json::array();
        const int w = el2->x.dim();
        for (int r = 0; r < w; ++r) {
            json row = json::array();
            for (int c = 0; c < w; ++c) row.push_back(el2->x(r, c));
            rows.push_back(std::move(row));
        }
        j["x_rows"] = std::move(rows);
    } else {
        j["type"] = "perm";
        j["images"] = el.perm.images();
    }
    return j;
}

GroupElement label_from_json(const json& j, int p) {
    const std::string type = j.at("type").get<std::string>();
    if (type == "super") {
        SuperLabel l{j.at("a").get<int>(), j.at("x").get<int>()};
        return GroupElement{super_to_perm(l, Prime(p)), l};
    }
    if (type == "epi") {
        const json& rows = j.at("x_rows");
        const int w = static_cast<int>(rows.size());
        GfMatrix x(Prime(p), w);
        for (int r = 0; r < w; ++r)
            for (int c = 0; c < w; ++c) x.set(r, c, rows[static_cast<size_t>(r)][static_cast<size_t>(c)].get<int>());
        EpiLabel l{j.at("a_dits").get<DitVector>(), std::move(x)};
        return GroupElement{epi_to_perm(l), l};
    }
    if (type == "perm") {
        return GroupElement{Perm(j.at("images").get<std::vector<int>>()), std::monostate{}};
    }
    throw std::runtime_error("unknown label type \"" + type + "\"");
}

} // namespace

void save_matrix(const std::string& path, const ComplexMatrix& m, const MatrixMetadata& meta) {
    json j;
    j["kind"] = "xu_matrix";
    j["n"] = m.rows();
    json rows = json::array();
    for (int r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
        rows.push_back(std::move(row));
    }
    j["entries"] = std::move(rows);
    if (meta.seed || !meta.generator.empty()) {
        json md;
        if (meta.seed) md["seed"] = *meta.seed;
        if (!meta.generator.empty()) md["generator"] = meta.generator;
        j["metadata"] = std::move(md);
    }
    write_json_file(path, j);
}

ComplexMatrix load_matrix(const std::string& path, MatrixMetadata* meta) {
    const json j = load_json_file(path, "xu_matrix");
    const int n = j.at("n").get<int>();
    const json& rows = j.at("entries");
    if (static_cast<int>(rows.size()) != n) throw std::runtime_error(path + ": entry rows do not match n");
    ComplexMatrix m(n, n);
    for (int r = 0; r < n; ++r) {
        const json& row = rows[static_cast<size_t>(r)];
        if (static_cast<int>(row.size()) != n) throw std::runtime_error(path + ": entry columns do not match n");
        for (int c = 0; c < n; ++c) m(r, c) = complex_from_json(row[static_cast<size_t>(c)]);
    }
    if (meta && j.contains("metadata")) {
        const json& md = j["metadata"];
        if (md.contains("seed")) meta->seed = md["seed"].get<uint64_t>();
        meta->generator = md.value("generator", "");
    }
    return m;
}

void save_decomposition(const std::string& path, const Decomposition& d, const VerifyReport& audit) {
    json j;
    j["kind"] = "birkhoff_decomposition";
    j["n"] = d.n;
    j["group"] = to_string(d.group);
    j["strategy"] = to_string(d.strategy);
    j["t_choice"] = d.t_choice;
    j["N"] = d.group_order;
    if (d.group != GroupKind::symmetric) {
        j["p"] = d.p;
        j["w"] = d.w;
    }
    json terms = json::array();
    for (const DecompTerm& term : d.terms) {
        json t;
        t["label"] = label_to_json(term.element);
        t["weight"] = complex_to_json(term.weight);
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    json a;
    a["sum_c"] = complex_to_json(audit.sum_c);
    a["sum_abs2"] = audit.sum_abs2;
    a["sum_abs2_asserted"] = audit.sum_abs2_asserted;
    a["residual"] = audit.residual;
    a["nonzero_count"] = audit.nonzero_count;
    a["negligible_count"] = audit.negligible_count;
    j["audit"] = std::move(a);
    write_json_file(path, j);
}

Decomposition load_decomposition(const std::string& path) {
    const json j = load_json_file(path, "birkhoff_decomposition");
    Decomposition d;
    d.n = j.at("n").get<int>();
    d.group = kind_from_string(j.at("group").get<std::string>());
    d.strategy = strategy_from_string(j.at("strategy").get<std::string>());
    d.t_choice = j.value("t_choice", "");
    d.group_order = j.at("N").get<long long>();
    d.p = j.value("p", 0);
    d.w = j.value("w", 0);
    const json& terms = j.at("terms");
    d.terms.reserve(terms.size());
    for (const json& t : terms) {
        GroupElement el = label_from_json(t.at("label"), d.p);
        if (el.perm.size() != d.n) throw std::runtime_error(path + ": term degree does not match n");
        d.terms.push_back(DecompTerm{std::move(el), complex_from_json(t.at("weight"))});
    }
    return d;
}

} // namespace birkhoff
