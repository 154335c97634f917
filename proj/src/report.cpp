#include "khtor/report.hpp"

#include <map>
#include <sstream>

#include "corpus_data.hpp"

namespace khtor {

Format parse_format(const std::string& s) {
    if (s == "text") return Format::text;
    if (s == "json") return Format::json;
    if (s == "csv") return Format::csv;
    throw input_error("unknown format '" + s + "' (expected text, json or csv)");
}

namespace {

std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

}  // namespace

std::string render_torsion(const TorsionReport& r, Format f) {
    std::ostringstream os;
    switch (f) {
        case Format::text:
            for (const auto& row : r.rows) {
                os << '[';
                for (const auto& c : row.contributions) os << rat_to_string(c) << ' ';
                os << rat_to_string(row.torsion) << " \"" << row.q << "\"]\n";
            }
            break;
        case Format::json: {
            os << "{\"name\":\"" << json_escape(r.name) << "\",\"rows\":[";
            bool first = true;
            for (const auto& row : r.rows) {
                if (!first) os << ',';
                first = false;
                os << "{\"q\":" << row.q << ",\"contributions\":[";
                for (size_t i = 0; i < row.contributions.size(); ++i) {
                    if (i) os << ',';
                    os << '"' << rat_to_string(row.contributions[i]) << '"';
                }
                os << "],\"torsion\":\"" << rat_to_string(row.torsion) << "\"}";
            }
            os << "]}\n";
            break;
        }
        case Format::csv:
            os << "q,contributions,torsion\n";
            for (const auto& row : r.rows) {
                os << row.q << ',';
                for (size_t i = 0; i < row.contributions.size(); ++i) {
                    if (i) os << ' ';
                    os << rat_to_string(row.contributions[i]);
                }
                os << ',' << rat_to_string(row.torsion) << '\n';
            }
            break;
    }
    return os.str();
}

namespace {

std::string group_description(const std::vector<IntegralCohomology::Group>& groups) {
    int free_rank = 0;
    std::vector<Int> torsion;
    for (const auto& g : groups) {
        free_rank += g.free_rank;
        torsion.insert(torsion.end(), g.torsion.begin(), g.torsion.end());
    }
    std::ostringstream os;
    bool any = false;
    if (free_rank == 1) {
        os << "Z";
        any = true;
    } else if (free_rank > 1) {
        os << "Z^" << free_rank;
        any = true;
    }
    for (const auto& t : torsion) {
        if (any) os << " + ";
        os << "Z_" << t;
        any = true;
    }
    if (!any) os << "0";
    return os.str();
}

}  // namespace

std::string render_homology(const IntegralCohomology& h, const std::string& name, Format f) {
    std::ostringstream os;
    switch (f) {
        case Format::text:
            for (const auto& [q, groups] : h.by_q) os << q << ": " << group_description(groups) << '\n';
            break;
        case Format::json: {
            os << "{\"name\":\"" << json_escape(name) << "\",\"rows\":[";
            bool first_row = true;
            for (const auto& [q, groups] : h.by_q) {
                if (!first_row) os << ',';
                first_row = false;
                os << "{\"q\":" << q << ",\"groups\":[";
                bool first_g = true;
                for (int i = 0; i < int(groups.size()); ++i) {
                    if (groups[i].trivial()) continue;
                    if (!first_g) os << ',';
                    first_g = false;
                    os << "{\"r\":" << h.r_min + i << ",\"free_rank\":" << groups[i].free_rank
                       << ",\"torsion\":[";
                    for (size_t t = 0; t < groups[i].torsion.size(); ++t) {
                        if (t) os << ',';
                        os << '"' << groups[i].torsion[t].get_str() << '"';
                    }
                    os << "]}";
                }
                os << "]}";
            }
            os << "]}\n";
            break;
        }
        case Format::csv:
            os << "q,groups\n";
            for (const auto& [q, groups] : h.by_q) os << q << ',' << group_description(groups) << '\n';
            break;
    }
    return os.str();
}

std::string render_jones(const Laurent& p, const std::string& name, Format f) {
    std::ostringstream os;
    switch (f) {
        case Format::text:
            os << to_string(p) << '\n';
            break;
        case Format::json: {
            os << "{\"name\":\"" << json_escape(name) << "\",\"terms\":[";
            bool first = true;
            for (const auto& [e, c] : p.coeff) {
                if (!first) os << ',';
                first = false;
                os << '[' << e << ",\"" << c.get_str() << "\"]";
            }
            os << "]}\n";
            break;
        }
        case Format::csv:
            os << "exponent,coefficient\n";
            for (const auto& [e, c] : p.coeff) os << e << ',' << c.get_str() << '\n';
            break;
    }
    return os.str();
}

const std::vector<CorpusEntry>& corpus_entries() {
    static const std::vector<CorpusEntry> entries = [] {
        std::vector<CorpusEntry> out;
        std::istringstream is(detail::corpus_tsv());
        std::string line;
        while (std::getline(is, line)) {
            if (line.empty() || line[0] == '#') continue;
            auto fields = split(line, '\t');
            if (fields.size() != 2) throw input_error("corpus table: bad line '" + line + "'");
            out.push_back({fields[0], fields[1]});
        }
        return out;
    }();
    return entries;
}

PDCode builtin_table(const std::string& name) {
    for (const auto& e : corpus_entries())
        if (e.name == name) return parse_pd(e.pd);
    throw input_error("unknown diagram name '" + name + "'");
}

std::vector<std::string> builtin_names() {
    std::vector<std::string> names;
    for (const auto& e : corpus_entries()) names.push_back(e.name);
    return names;
}

ExpectedTable parse_expected_tsv(const std::string& text) {
    ExpectedTable table;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        auto fields = split(line, '\t');
        if (fields.size() != 3)
            throw input_error("expected table: bad line " + std::to_string(lineno));
        try {
            ExpectedRow row{std::stoi(fields[1]), rat_from_string(fields[2])};
            if (table.empty() || table.back().first != fields[0]) table.push_back({fields[0], {}});
            table.back().second.push_back(row);
        } catch (const input_error&) {
            throw;
        } catch (const std::exception&) {
            throw input_error("expected table: bad line " + std::to_string(lineno));
        }
    }
    if (table.empty()) throw input_error("expected table: no rows");
    return table;
}

const std::string& bundled_expected_tsv() {
    static const std::string text = detail::expected_tsv();
    return text;
}

}  // namespace khtor
