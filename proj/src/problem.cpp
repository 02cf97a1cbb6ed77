#include "ivif/problem.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iterator>
#include <set>
#include <sstream>

#include "json.hpp"

#include "ivif/error.hpp"

namespace ivif {

using nlohmann::json;

namespace {

std::string lowercase(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

std::string describe(const CellLocation& where) {
    std::ostringstream os;
    bool any = false;
    auto part = [&](const char* name, const std::string& value) {
        if (value.empty()) return;
        os << (any ? ", " : " (") << name << " " << value;
        any = true;
    };
    part("expert", where.expert);
    part("row", where.row);
    part("column", where.column);
    if (any) os << ")";
    return os.str();
}

}  // namespace

LinguisticScale::LinguisticScale(std::vector<std::pair<std::string, Ivifn>> entries)
    : entries_(std::move(entries)) {
    std::set<std::string> seen;
    for (const auto& [label, value] : entries_) {
        if (label.empty()) throw DomainError("linguistic scale: empty label");
        if (!seen.insert(lowercase(label)).second) {
            throw DomainError("linguistic scale: duplicate label '" + label + "'");
        }
    }
}

const LinguisticScale& LinguisticScale::standard() {
    static const LinguisticScale scale({
        {"ET", Ivifn(0.00, 0.10, 0.85, 0.90)},
        {"VT", Ivifn(0.00, 0.10, 0.70, 0.75)},
        {"T", Ivifn(0.15, 0.25, 0.55, 0.60)},
        {"MT", Ivifn(0.30, 0.40, 0.45, 0.50)},
        {"M", Ivifn(0.40, 0.50, 0.35, 0.40)},
        {"MG", Ivifn(0.50, 0.60, 0.25, 0.30)},
        {"G", Ivifn(0.60, 0.70, 0.15, 0.20)},
        {"VG", Ivifn(0.70, 0.80, 0.05, 0.10)},
        {"EG", Ivifn(0.80, 0.90, 0.05, 0.10)},
        {"PG", Ivifn(1.00, 1.00, 0.00, 0.00)},
    });
    return scale;
}

std::optional<Ivifn> LinguisticScale::find(const std::string& label) const {
    const std::string key = lowercase(label);
    for (const auto& [name, value] : entries_) {
        if (lowercase(name) == key) return value;
    }
    return std::nullopt;
}

Ivifn resolve_label(const std::string& label, const LinguisticScale& scale, const CellLocation& where) {
    if (auto v = scale.find(label)) return *v;
    throw DomainError("unknown linguistic label '" + label + "'" + describe(where));
}

WeightVector Problem::expert_weights() const {
    std::vector<double> w;
    w.reserve(experts.size());
    for (const auto& e : experts) w.push_back(e.weight);
    return WeightVector(std::move(w));
}

std::vector<std::string> Problem::attribute_names() const {
    std::vector<std::string> names;
    names.reserve(attributes.size());
    for (const auto& a : attributes) names.push_back(a.name);
    return names;
}

namespace {

std::string pointer(const std::string& base, const std::string& key) {
    // JSON pointer escaping for keys that contain '~' or '/'.
    std::string escaped;
    for (char c : key) {
        if (c == '~') escaped += "~0";
        else if (c == '/') escaped += "~1";
        else escaped += c;
    }
    return base + "/" + escaped;
}

std::string pointer(const std::string& base, std::size_t index) {
    return base + "/" + std::to_string(index);
}

[[noreturn]] void fail(const std::string& where, const std::string& what) { throw ParseError(what, where); }

const json& require(const json& obj, const std::string& key, const std::string& where) {
    auto it = obj.find(key);
    if (it == obj.end()) fail(where, "missing required field '" + key + "'");
    return *it;
}

std::string require_string(const json& v, const std::string& where) {
    if (!v.is_string()) fail(where, "expected a string");
    std::string s = v.get<std::string>();
    if (s.empty()) fail(where, "expected a non-empty string");
    return s;
}

double require_number(const json& v, const std::string& where) {
    if (!v.is_number()) fail(where, "expected a number");
    return v.get<double>();
}

const json& require_array(const json& v, const std::string& where) {
    if (!v.is_array()) fail(where, "expected an array");
    return v;
}

void check_keys(const json& obj, std::initializer_list<const char*> allowed, const std::string& where) {
    for (const auto& [key, value] : obj.items()) {
        if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; })) {
            fail(pointer(where, key), "unknown field '" + key + "'");
        }
    }
}

void check_format(const json& doc, const char* expected) {
    auto it = doc.find("format");
    if (it == doc.end()) return;
    if (!it->is_string() || it->get<std::string>() != expected) {
        fail("/format", std::string("unsupported format, expected '") + expected + "'");
    }
}

json parse_json(std::istream& in) {
    const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        const std::size_t end = std::min<std::size_t>(e.byte, text.size());
        const std::size_t line = 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + end, '\n'));
        std::string msg = e.what();
        if (auto pos = msg.find("] "); pos != std::string::npos) msg = msg.substr(pos + 2);
        throw ParseError(msg, "line " + std::to_string(line));
    }
}

Ivifn parse_quad(const json& v, const std::string& where) {
    require_array(v, where);
    if (v.size() != 4) fail(where, "a numeric cell needs exactly four bounds [lm, rm, ln, rn]");
    std::array<double, 4> b{};
    for (std::size_t i = 0; i < 4; ++i) b[i] = require_number(v[i], pointer(where, i));
    if (auto err = validate_bounds(b[0], b[1], b[2], b[3]); !err.empty()) fail(where, "invalid IVIFN: " + err);
    return Ivifn(b);
}

std::vector<std::string> parse_labels(const json& v, const std::string& where) {
    require_array(v, where);
    if (v.empty()) fail(where, "must not be empty");
    std::vector<std::string> out;
    std::set<std::string> seen;
    for (std::size_t i = 0; i < v.size(); ++i) {
        out.push_back(require_string(v[i], pointer(where, i)));
        if (!seen.insert(out.back()).second) fail(pointer(where, i), "duplicate label '" + out.back() + "'");
    }
    return out;
}

}  // namespace

Problem parse_problem(std::istream& in, const LinguisticScale& scale) {
    const json doc = parse_json(in);
    if (!doc.is_object()) fail("/", "problem document must be an object");
    check_keys(doc, {"format", "alternatives", "attributes", "experts", "matrices", "cpt", "fixed_weights", "method"}, "");
    check_format(doc, kProblemFormat);

    Problem p;
    p.alternatives = parse_labels(require(doc, "alternatives", "/"), "/alternatives");

    const json& attrs = require_array(require(doc, "attributes", "/"), "/attributes");
    if (attrs.empty()) fail("/attributes", "must not be empty");
    std::set<std::string> attr_names;
    for (std::size_t i = 0; i < attrs.size(); ++i) {
        const std::string where = pointer("/attributes", i);
        if (!attrs[i].is_object()) fail(where, "expected an object with 'name' and 'kind'");
        check_keys(attrs[i], {"name", "kind"}, where);
        AttributeSpec spec;
        spec.name = require_string(require(attrs[i], "name", where), where + "/name");
        if (!attr_names.insert(spec.name).second) fail(where + "/name", "duplicate attribute '" + spec.name + "'");
        const std::string kind = require_string(require(attrs[i], "kind", where), where + "/kind");
        try {
            spec.kind = attribute_kind_from_string(kind);
        } catch (const DomainError& e) {
            fail(where + "/kind", e.what());
        }
        p.attributes.push_back(std::move(spec));
    }

    const json& experts = require_array(require(doc, "experts", "/"), "/experts");
    if (experts.empty()) fail("/experts", "must not be empty");
    std::set<std::string> expert_ids;
    for (std::size_t i = 0; i < experts.size(); ++i) {
        const std::string where = pointer("/experts", i);
        if (!experts[i].is_object()) fail(where, "expected an object with 'id' and 'weight'");
        check_keys(experts[i], {"id", "weight"}, where);
        ExpertInfo e;
        e.id = require_string(require(experts[i], "id", where), where + "/id");
        if (!expert_ids.insert(e.id).second) fail(where + "/id", "duplicate expert '" + e.id + "'");
        e.weight = require_number(require(experts[i], "weight", where), where + "/weight");
        p.experts.push_back(std::move(e));
    }
    try {
        (void)p.expert_weights();
    } catch (const DomainError& e) {
        fail("/experts", std::string("expert weights: ") + e.what());
    }

    const json& matrices = require(doc, "matrices", "/");
    if (!matrices.is_object()) fail("/matrices", "expected an object keyed by expert id");
    for (const auto& [key, value] : matrices.items()) {
        if (!expert_ids.count(key)) fail(pointer("/matrices", key), "matrix for undeclared expert '" + key + "'");
    }
    const std::size_t n = p.alternatives.size(), k = p.attributes.size();
    for (const auto& expert : p.experts) {
        const std::string where = pointer("/matrices", expert.id);
        auto it = matrices.find(expert.id);
        if (it == matrices.end()) fail(where, "missing matrix for expert '" + expert.id + "'");
        const json& grid = require_array(*it, where);
        if (grid.size() != n) {
            fail(where, "expected " + std::to_string(n) + " rows, got " + std::to_string(grid.size()));
        }
        ExpertMatrix em{expert.id, Grid<Ivifn>(n, k, Ivifn::min())};
        for (std::size_t r = 0; r < n; ++r) {
            const std::string row_where = pointer(where, r);
            const json& row = require_array(grid[r], row_where);
            if (row.size() != k) {
                fail(row_where, "expected " + std::to_string(k) + " cells, got " + std::to_string(row.size()));
            }
            for (std::size_t c = 0; c < k; ++c) {
                const std::string cell_where = pointer(row_where, c);
                const json& cell = row[c];
                if (cell.is_string()) {
                    try {
                        em.cells(r, c) = resolve_label(cell.get<std::string>(), scale,
                                                       {expert.id, p.alternatives[r], p.attributes[c].name});
                    } catch (const DomainError& e) {
                        fail(cell_where, e.what());
                    }
                } else if (cell.is_array()) {
                    em.cells(r, c) = parse_quad(cell, cell_where);
                } else {
                    fail(cell_where, "cell must be a linguistic label or a [lm, rm, ln, rn] quadruple");
                }
            }
        }
        p.matrices.push_back(std::move(em));
    }

    if (auto it = doc.find("cpt"); it != doc.end()) {
        if (!it->is_object()) fail("/cpt", "expected an object");
        check_keys(*it, {"alpha", "beta", "gamma", "delta", "rho"}, "/cpt");
        for (const auto& [key, value] : it->items()) {
            const double v = require_number(value, pointer("/cpt", key));
            if (key == "alpha") p.cpt.alpha = v;
            else if (key == "beta") p.cpt.beta = v;
            else if (key == "gamma") p.cpt.gamma = v;
            else if (key == "delta") p.cpt.delta = v;
            else p.cpt.rho = v;
        }
        try {
            p.cpt.validate();
        } catch (const DomainError& e) {
            fail("/cpt", e.what());
        }
    }

    if (auto it = doc.find("fixed_weights"); it != doc.end() && !it->is_null()) {
        const json& fw = require_array(*it, "/fixed_weights");
        if (fw.size() != k) {
            fail("/fixed_weights", "expected " + std::to_string(k) + " weights, got " + std::to_string(fw.size()));
        }
        std::vector<double> w;
        for (std::size_t i = 0; i < fw.size(); ++i) w.push_back(require_number(fw[i], pointer("/fixed_weights", i)));
        try {
            p.fixed_weights = WeightVector(std::move(w));
        } catch (const DomainError& e) {
            fail("/fixed_weights", e.what());
        }
    }

    if (auto it = doc.find("method"); it != doc.end()) {
        try {
            p.method = method_from_string(require_string(*it, "/method"));
        } catch (const DomainError& e) {
            fail("/method", e.what());
        }
    }
    return p;
}

Problem parse_problem_text(const std::string& text, const LinguisticScale& scale) {
    std::istringstream in(text);
    return parse_problem(in, scale);
}

Problem load_problem(const std::string& path, const LinguisticScale& scale) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open problem file", path);
    try {
        return parse_problem(in, scale);
    } catch (const ParseError& e) {
        throw ParseError(e.message(), e.location().empty() ? path : path + ":" + e.location());
    }
}

LinguisticScale parse_scale(std::istream& in) {
    const json doc = parse_json(in);
    if (!doc.is_object()) fail("/", "scale document must be an object");
    check_keys(doc, {"format", "entries"}, "");
    check_format(doc, kScaleFormat);
    const json& entries = require_array(require(doc, "entries", "/"), "/entries");
    if (entries.empty()) fail("/entries", "must not be empty");
    std::vector<std::pair<std::string, Ivifn>> out;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const std::string where = pointer("/entries", i);
        if (!entries[i].is_object()) fail(where, "expected an object with 'label' and 'value'");
        check_keys(entries[i], {"label", "value", "description"}, where);
        std::string label = require_string(require(entries[i], "label", where), where + "/label");
        Ivifn value = parse_quad(require(entries[i], "value", where), where + "/value");
        out.emplace_back(std::move(label), value);
    }
    try {
        return LinguisticScale(std::move(out));
    } catch (const DomainError& e) {
        fail("/entries", e.what());
    }
}

LinguisticScale load_scale(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open scale file", path);
    try {
        return parse_scale(in);
    } catch (const ParseError& e) {
        throw ParseError(e.message(), e.location().empty() ? path : path + ":" + e.location());
    }
}

namespace {

json quad(const Ivifn& x) { return json::array({x.lm(), x.rm(), x.ln(), x.rn()}); }

}  // namespace

std::string dump_problem(const Problem& p) {
    json doc;
    doc["format"] = kProblemFormat;
    doc["alternatives"] = p.alternatives;
    doc["attributes"] = json::array();
    for (const auto& a : p.attributes) doc["attributes"].push_back({{"name", a.name}, {"kind", to_string(a.kind)}});
    doc["experts"] = json::array();
    for (const auto& e : p.experts) doc["experts"].push_back({{"id", e.id}, {"weight", e.weight}});
    doc["matrices"] = json::object();
    for (const auto& m : p.matrices) {
        json grid = json::array();
        for (std::size_t r = 0; r < m.cells.rows(); ++r) {
            json row = json::array();
            for (const auto& cell : m.cells.row(r)) row.push_back(quad(cell));
            grid.push_back(std::move(row));
        }
        doc["matrices"][m.expert_id] = std::move(grid);
    }
    doc["cpt"] = {{"alpha", p.cpt.alpha}, {"beta", p.cpt.beta}, {"gamma", p.cpt.gamma},
                  {"delta", p.cpt.delta}, {"rho", p.cpt.rho}};
    if (p.fixed_weights) doc["fixed_weights"] = p.fixed_weights->values();
    doc["method"] = to_string(p.method);
    return doc.dump(2) + "\n";
}

std::string dump_scale(const LinguisticScale& scale) {
    json doc;
    doc["format"] = kScaleFormat;
    doc["entries"] = json::array();
    for (const auto& [label, value] : scale.entries()) doc["entries"].push_back({{"label", label}, {"value", quad(value)}});
    return doc.dump(2) + "\n";
}

}  // namespace ivif
