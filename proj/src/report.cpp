#include "ivif/report.hpp"

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "json.hpp"

#include "ivif/error.hpp"

namespace ivif {

using nlohmann::json;
using nlohmann::ordered_json;

const Table* Report::find(const std::string& name) const {
    for (const auto& t : tables) {
        if (t.name == name) return &t;
    }
    return nullptr;
}

std::string format_number(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (v == 0.0) return "0";
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

double round3(double v) { return std::round(v * 1000.0) / 1000.0; }

namespace {

const char* const kBoundSuffix[] = {".lm", ".rm", ".ln", ".rn"};

Table ivifn_grid_table(std::string name, const std::vector<std::string>& rows,
                       const std::vector<std::string>& cols, const Grid<Ivifn>& cells) {
    Table t{std::move(name), "alternative", rows, {}, Grid<double>(cells.rows(), cells.cols() * 4, 0.0)};
    for (const auto& c : cols) {
        for (const char* suffix : kBoundSuffix) t.col_labels.push_back(c + suffix);
    }
    for (std::size_t r = 0; r < cells.rows(); ++r) {
        for (std::size_t c = 0; c < cells.cols(); ++c) {
            const auto b = cells(r, c).bounds();
            for (std::size_t i = 0; i < 4; ++i) t.values(r, c * 4 + i) = b[i];
        }
    }
    return t;
}

Table ivifn_row_table(std::string name, std::string row_label, const std::vector<std::string>& cols,
                      const std::vector<Ivifn>& row) {
    Grid<Ivifn> g(1, row.size(), Ivifn::min());
    for (std::size_t c = 0; c < row.size(); ++c) g(0, c) = row[c];
    Table t = ivifn_grid_table(std::move(name), {std::move(row_label)}, cols, g);
    t.corner = "";
    return t;
}

Table grid_table(std::string name, std::string corner, const std::vector<std::string>& rows,
                 const std::vector<std::string>& cols, const Grid<double>& values) {
    return {std::move(name), std::move(corner), rows, cols, values};
}

Table row_table(std::string name, std::string row_label, const std::vector<std::string>& cols,
                const std::vector<double>& values) {
    Grid<double> g(1, values.size(), 0.0);
    for (std::size_t c = 0; c < values.size(); ++c) g(0, c) = values[c];
    return {std::move(name), "", {std::move(row_label)}, cols, std::move(g)};
}

Table columns_table(std::string name, const std::vector<std::string>& rows,
                    const std::vector<std::pair<std::string, std::vector<double>>>& columns) {
    Table t{std::move(name), "alternative", rows, {}, Grid<double>(rows.size(), columns.size(), 0.0)};
    for (std::size_t c = 0; c < columns.size(); ++c) {
        t.col_labels.push_back(columns[c].first);
        for (std::size_t r = 0; r < rows.size(); ++r) t.values(r, c) = columns[c].second[r];
    }
    return t;
}

std::vector<double> as_doubles(const std::vector<bool>& flags) {
    std::vector<double> out;
    for (bool f : flags) out.push_back(f ? 1.0 : 0.0);
    return out;
}

std::vector<std::string> labels_where(const std::vector<std::string>& labels, const std::vector<bool>& flags) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < flags.size() && i < labels.size(); ++i) {
        if (flags[i]) out.push_back(labels[i]);
    }
    return out;
}

}  // namespace

Report build_report(const Problem& problem, const PipelineResult& res, const PipelineOptions& options,
                    bool emit_intermediates) {
    const auto& alts = problem.alternatives;
    const auto attrs = problem.attribute_names();
    Report rep;
    rep.method = to_string(res.method);
    for (std::size_t idx : res.ranking) rep.ranking.push_back(alts[idx]);

    auto meta = [&](std::string key, const json& value) { rep.metadata.emplace_back(std::move(key), value.dump()); };
    std::vector<std::string> flags;

    meta("method", rep.method);
    meta("weights_source", problem.fixed_weights ? "fixed" : "entropy");
    if (!problem.fixed_weights) meta("distance_form", to_string(options.distance));

    if (emit_intermediates) {
        rep.tables.push_back(ivifn_grid_table("group_matrix", alts, attrs, res.group.cells));
        rep.tables.push_back(ivifn_grid_table("normalized_matrix", alts, attrs, res.normalized.cells));
        if (res.entropy) {
            rep.tables.push_back(ivifn_row_table("negative_ideal", "NIP", attrs, res.entropy->nip));
            rep.tables.push_back(grid_table("nip_distance", "alternative", alts, attrs, res.entropy->dist));
            rep.tables.push_back(
                grid_table("nip_distance_normalized", "alternative", alts, attrs, res.entropy->norm_dist));
            rep.tables.push_back(row_table("entropy", "E", attrs, res.entropy->entropy));
        }
    }
    if (res.entropy) {
        auto degenerate = labels_where(attrs, res.entropy->degenerate_columns);
        if (!degenerate.empty()) {
            flags.push_back("entropy_degenerate_columns");
            meta("entropy_degenerate_columns", degenerate);
        }
    }
    rep.tables.push_back(row_table("weights", "weight", attrs, res.weights.values()));

    if (res.edas) {
        const auto& t = *res.edas;
        meta("cpt", json{{"alpha", res.cpt.alpha}, {"beta", res.cpt.beta}, {"gamma", res.cpt.gamma},
                         {"delta", res.cpt.delta}, {"rho", res.cpt.rho}});
        if (emit_intermediates) {
            rep.tables.push_back(ivifn_row_table("average_solution", "AV", attrs, t.avg));
            rep.tables.push_back(grid_table("relative_weights", "alternative", alts, attrs, t.rel_weights));
            rep.tables.push_back(grid_table("pda", "alternative", alts, attrs, t.pda));
            rep.tables.push_back(grid_table("nda", "alternative", alts, attrs, t.nda));
        }
        rep.tables.push_back(columns_table(
            "scores", alts, {{"sp", t.sp}, {"sn", t.sn}, {"nsp", t.nsp}, {"nsn", t.nsn}, {"score", t.scores}}));
        if (t.sp_degenerate) flags.push_back("all_sp_zero");
        if (t.sn_degenerate) flags.push_back("all_sn_zero");
    }
    if (res.ivifwa) {
        const auto& t = *res.ivifwa;
        Grid<Ivifn> agg(t.aggregate.size(), 1, Ivifn::min());
        for (std::size_t r = 0; r < t.aggregate.size(); ++r) agg(r, 0) = t.aggregate[r];
        Table tab = ivifn_grid_table("ivifwa", alts, {"aggregate"}, agg);
        Grid<double> values(alts.size(), 6, 0.0);
        for (std::size_t r = 0; r < alts.size(); ++r) {
            for (std::size_t c = 0; c < 4; ++c) values(r, c) = tab.values(r, c);
            values(r, 4) = t.sf[r];
            values(r, 5) = t.af[r];
        }
        tab.col_labels.push_back("sf");
        tab.col_labels.push_back("af");
        tab.values = std::move(values);
        rep.tables.push_back(std::move(tab));
    }
    if (res.topsis) {
        const auto& t = *res.topsis;
        meta("topsis_form", to_string(t.form));
        if (emit_intermediates) {
            rep.tables.push_back(ivifn_row_table("topsis_pis", "PIS", attrs, t.pis));
            rep.tables.push_back(ivifn_row_table("topsis_nis", "NIS", attrs, t.nis));
        }
        rep.tables.push_back(
            columns_table("topsis", alts, {{"d_plus", t.d_plus}, {"d_minus", t.d_minus}, {"closeness", t.closeness}}));
        if (t.degenerate) flags.push_back("topsis_degenerate");
    }
    if (res.taxonomy) {
        const auto& t = *res.taxonomy;
        meta("taxonomy_bounds", json::array({t.lower_bound, t.upper_bound}));
        meta("taxonomy_k", t.k_bound);
        meta("taxonomy_drop_outliers", options.taxonomy.drop_outliers);
        if (emit_intermediates) {
            rep.tables.push_back(grid_table("taxonomy_distance", "alternative", alts, alts, t.dist_matrix));
            rep.tables.push_back(ivifn_row_table("taxonomy_ideal", "ideal", attrs, t.ideal));
        }
        rep.tables.push_back(columns_table("taxonomy", alts,
                                           {{"row_mean", t.row_mean},
                                            {"outlier", as_doubles(t.outlier)},
                                            {"k_ro", t.k_ro},
                                            {"development", t.development}}));
        auto outliers = labels_where(alts, t.outlier);
        if (!outliers.empty()) {
            flags.push_back("taxonomy_outliers");
            meta("taxonomy_outliers", outliers);
        }
    }
    if (res.todim) {
        const auto& t = *res.todim;
        meta("todim_form", to_string(t.form));
        meta("todim_theta", t.theta);
        if (emit_intermediates) {
            rep.tables.push_back(grid_table("todim_dominance", "alternative", alts, alts, t.dominance));
        }
        rep.tables.push_back(columns_table("todim", alts, {{"overall", t.overall}, {"xi", t.xi}}));
        if (t.degenerate) flags.push_back("todim_degenerate");
    }

    meta("flags", flags);
    return rep;
}

namespace {

ordered_json table_json(const Table& t) {
    ordered_json j;
    j["corner"] = t.corner;
    j["rows"] = t.row_labels;
    j["columns"] = t.col_labels;
    ordered_json values = ordered_json::array(), rounded = ordered_json::array();
    for (std::size_t r = 0; r < t.values.rows(); ++r) {
        ordered_json vr = ordered_json::array(), rr = ordered_json::array();
        for (double v : t.values.row(r)) {
            vr.push_back(v);
            rr.push_back(round3(v));
        }
        values.push_back(std::move(vr));
        rounded.push_back(std::move(rr));
    }
    j["values"] = std::move(values);
    j["rounded"] = std::move(rounded);
    return j;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string join_ranking(const std::vector<std::string>& alts, const std::vector<std::size_t>& ranking) {
    std::string out;
    for (std::size_t i = 0; i < ranking.size(); ++i) {
        if (i) out += ">";
        out += alts[ranking[i]];
    }
    return out;
}

}  // namespace

std::string report_to_json(const Report& report) {
    ordered_json doc;
    doc["format"] = kReportFormat;
    doc["method"] = report.method;
    doc["ranking"] = report.ranking;
    ordered_json meta = ordered_json::object();
    for (const auto& [key, value] : report.metadata) meta[key] = ordered_json::parse(value);
    doc["metadata"] = std::move(meta);
    ordered_json tables = ordered_json::object();
    for (const auto& t : report.tables) tables[t.name] = table_json(t);
    doc["tables"] = std::move(tables);
    return doc.dump(2) + "\n";
}

void write_table_csv(const Table& table, std::ostream& out, bool rounded) {
    out << csv_field(table.corner);
    for (const auto& c : table.col_labels) out << ',' << csv_field(c);
    out << '\n';
    for (std::size_t r = 0; r < table.values.rows(); ++r) {
        out << csv_field(table.row_labels[r]);
        for (double v : table.values.row(r)) out << ',' << format_number(rounded ? round3(v) : v);
        out << '\n';
    }
}

std::vector<std::string> write_report_csv(const Report& report, const std::string& dir) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw Error("cannot create output directory '" + dir + "': " + ec.message());
    std::vector<std::string> written;
    auto open = [&](const std::string& file) {
        const std::string path = (fs::path(dir) / file).string();
        std::ofstream out(path);
        if (!out) throw Error("cannot write '" + path + "'");
        written.push_back(path);
        return out;
    };
    for (const auto& t : report.tables) {
        auto full = open(t.name + ".csv");
        write_table_csv(t, full, false);
        auto rounded = open(t.name + ".rounded.csv");
        write_table_csv(t, rounded, true);
    }
    {
        auto out = open("ranking.csv");
        out << "rank,alternative\n";
        for (std::size_t i = 0; i < report.ranking.size(); ++i) out << i + 1 << ',' << csv_field(report.ranking[i]) << '\n';
    }
    {
        auto out = open("metadata.csv");
        out << "key,value\n";
        for (const auto& [key, value] : report.metadata) {
            // Plain strings read better unquoted; arrays and objects stay JSON.
            const auto parsed = ordered_json::parse(value);
            const std::string text = parsed.is_string() ? parsed.get<std::string>() : value;
            out << csv_field(key) << ',' << csv_field(text) << '\n';
        }
    }
    return written;
}

std::string sweep_to_csv(const SweepResult& s) {
    std::ostringstream out;
    out << csv_field(s.param);
    for (const auto& a : s.alternatives) out << ',' << csv_field(a);
    out << ",ranking\n";
    for (const auto& row : s.rows) {
        out << format_number(row.value);
        for (double v : row.scores) out << ',' << format_number(v);
        out << ',' << join_ranking(s.alternatives, row.ranking) << '\n';
    }
    return out.str();
}

std::string sweep_to_json(const SweepResult& s) {
    ordered_json doc;
    doc["format"] = kSweepFormat;
    doc["method"] = "edas";
    doc["param"] = s.param;
    doc["alternatives"] = s.alternatives;
    ordered_json rows = ordered_json::array();
    for (const auto& row : s.rows) {
        ordered_json r;
        r["value"] = row.value;
        r["scores"] = row.scores;
        ordered_json rounded = ordered_json::array();
        for (double v : row.scores) rounded.push_back(round3(v));
        r["rounded"] = std::move(rounded);
        std::vector<std::string> ranking;
        for (std::size_t idx : row.ranking) ranking.push_back(s.alternatives[idx]);
        r["ranking"] = std::move(ranking);
        rows.push_back(std::move(r));
    }
    doc["rows"] = std::move(rows);
    return doc.dump(2) + "\n";
}

std::string error_record(const std::string& kind, const std::string& message, const std::string& stage,
                         const std::string& location) {
    ordered_json j;
    j["error"] = kind;
    j["message"] = message;
    if (!stage.empty()) j["stage"] = stage;
    if (!location.empty()) j["location"] = location;
    return j.dump();
}

}  // namespace ivif
