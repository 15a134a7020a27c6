#include "mlsna/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

namespace mlsna {

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, sep)) cells.push_back(cell);
    return cells;
}

std::string trimmed(std::string s) {
    auto issp = [](unsigned char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
    while (!s.empty() && issp(static_cast<unsigned char>(s.back()))) s.pop_back();
    std::size_t i = 0;
    while (i < s.size() && issp(static_cast<unsigned char>(s[i]))) ++i;
    return s.substr(i);
}

bool parses_as_double(const std::string& s, double& out) {
    try {
        std::size_t pos = 0;
        out = std::stod(s, &pos);
        return pos == s.size();
    } catch (...) {
        return false;
    }
}

std::ifstream open_or_throw(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) raise(Errc::BadInput, "cannot open '" + file.string() + "'");
    return in;
}

} // namespace

std::vector<EdgeRecord> read_edge_list(const std::filesystem::path& file, bool undirected) {
    auto in = open_or_throw(file);
    std::vector<EdgeRecord> out;
    std::string line;
    bool first_data_line = true;
    while (std::getline(in, line)) {
        line = trimmed(line);
        if (line.empty() || line[0] == '#') continue;
        auto cells = split(line, '\t');
        if (cells.size() == 1) cells = split(line, ' ');
        if (cells.size() < 3) raise(Errc::BadInput, "malformed edge record: " + line);
        double w = 1.0;
        if (cells.size() >= 4 && !parses_as_double(cells[3], w)) {
            if (first_data_line) { // header
                first_data_line = false;
                continue;
            }
            raise(Errc::BadInput, "bad weight in: " + line);
        }
        first_data_line = false;
        out.push_back({cells[0], cells[1], cells[2], w});
        if (undirected) out.push_back({cells[1], cells[0], cells[2], w});
    }
    return out;
}

std::vector<EventRecord> read_event_log(const std::filesystem::path& file, bool undirected) {
    auto in = open_or_throw(file);
    std::vector<EventRecord> out;
    std::string line;
    bool first_data_line = true;
    while (std::getline(in, line)) {
        line = trimmed(line);
        if (line.empty() || line[0] == '#') continue;
        auto cells = split(line, '\t');
        if (cells.size() == 1) cells = split(line, ' ');
        if (cells.size() < 5) raise(Errc::BadInput, "malformed event record: " + line);
        double w = 0.0;
        double ts = 0.0;
        if (!parses_as_double(cells[3], w) || !parses_as_double(cells[4], ts)) {
            if (first_data_line) {
                first_data_line = false;
                continue;
            }
            raise(Errc::BadInput, "bad numeric column in: " + line);
        }
        first_data_line = false;
        out.push_back({cells[0], cells[1], cells[2], w, static_cast<std::int64_t>(ts)});
        if (undirected) out.push_back({cells[1], cells[0], cells[2], w, static_cast<std::int64_t>(ts)});
    }
    return out;
}

void write_edge_list(const std::filesystem::path& file, const Msn& msn) {
    std::ostringstream out;
    out << "# source\ttarget\tlayer\tweight\n";
    char buf[64];
    for (const auto& r : msn.to_records()) {
        std::snprintf(buf, sizeof buf, "%.17g", r.weight);
        out << r.source << '\t' << r.target << '\t' << r.layer << '\t' << buf << '\n';
    }
    atomic_write(file, out.str());
}

Partition read_groups_csv(const std::filesystem::path& file) {
    auto in = open_or_throw(file);
    std::map<std::string, std::vector<std::string>> by_group;
    std::vector<std::string> unassigned;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        line = trimmed(line);
        if (line.empty() || line[0] == '#') continue;
        auto cells = split(line, ',');
        if (cells.size() != 2) raise(Errc::BadInput, "expected node,group_id: " + line);
        if (first && (cells[1] == "group_id" || cells[1] == "group")) {
            first = false;
            continue;
        }
        first = false;
        if (cells[1] == "-1") unassigned.push_back(cells[0]);
        else by_group[cells[1]].push_back(cells[0]);
    }
    Partition p;
    for (auto& [id, members] : by_group) {
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
        p.groups.push_back({id, std::move(members), -1});
    }
    std::sort(unassigned.begin(), unassigned.end());
    unassigned.erase(std::unique(unassigned.begin(), unassigned.end()), unassigned.end());
    p.unassigned = std::move(unassigned);
    return p;
}

void write_groups_csv(const std::filesystem::path& file, const Partition& p) {
    std::ostringstream out;
    out << "node,group_id\n";
    std::vector<std::pair<std::string, std::string>> rows;
    for (const auto& g : p.groups)
        for (const auto& v : g.members) rows.push_back({v, g.id});
    for (const auto& v : p.unassigned) rows.push_back({v, "-1"});
    std::sort(rows.begin(), rows.end());
    for (const auto& [v, g] : rows) out << v << ',' << g << '\n';
    atomic_write(file, out.str());
}

std::vector<std::string> read_label_column(const std::filesystem::path& file) {
    auto in = open_or_throw(file);
    std::vector<std::string> out;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        line = trimmed(line);
        if (line.empty() || line[0] == '#') continue;
        if (first && (line == "label" || line == "class" || line == "prediction")) {
            first = false;
            continue;
        }
        first = false;
        out.push_back(line);
    }
    return out;
}

std::vector<std::pair<std::string, std::string>> read_kv_file(const std::filesystem::path& file) {
    auto in = open_or_throw(file);
    std::vector<std::pair<std::string, std::string>> out;
    std::string line;
    while (std::getline(in, line)) {
        line = trimmed(line);
        if (line.empty() || line[0] == '#') continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) raise(Errc::BadInput, "expected key=value: " + line);
        out.push_back({trimmed(line.substr(0, eq)), trimmed(line.substr(eq + 1))});
    }
    return out;
}

void atomic_write(const std::filesystem::path& file, const std::string& content) {
    auto tmp = file;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) raise(Errc::BadInput, "cannot write '" + tmp.string() + "'");
        out << content;
        if (!out) raise(Errc::BadInput, "short write to '" + tmp.string() + "'");
    }
    std::filesystem::rename(tmp, file);
}

} // namespace mlsna
