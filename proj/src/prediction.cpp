#include "mlsna/prediction.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace mlsna {

namespace {

long group_size(const std::vector<Partition>& partitions, int frame, const std::string& id) {
    const auto& groups = partitions[static_cast<std::size_t>(frame)].groups;
    for (const auto& g : groups)
        if (g.id == id) return static_cast<long>(g.members.size());
    raise(Errc::UnknownNode, "group '" + id + "' not present in frame " + std::to_string(frame));
}

} // namespace

std::vector<SequenceRow> extract_sequences(const std::vector<Chain>& chains,
                                           const std::vector<Partition>& partitions, int window) {
    if (window < 2) raise(Errc::BadInput, "window must be at least 2");
    std::vector<SequenceRow> rows;
    for (const auto& chain : chains) {
        std::vector<EventKind> all_events = chain.events;
        if (chain.terminal) all_events.push_back(*chain.terminal);
        // Row at position p: groups p..p+window-1 and their connecting
        // events, labelled by the event that follows.
        const long max_p = static_cast<long>(all_events.size()) - window;
        for (long p = 0; p <= max_p; ++p) {
            SequenceRow row;
            for (int k = 0; k < window; ++k) {
                const auto& g = chain.groups[static_cast<std::size_t>(p + k)];
                row.sizes.push_back(group_size(partitions, g.first, g.second));
                if (k + 1 < window)
                    row.events.push_back(all_events[static_cast<std::size_t>(p + k)]);
            }
            row.label = all_events[static_cast<std::size_t>(p + window - 1)];
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

void export_dataset(const std::vector<SequenceRow>& rows, DatasetFormat format,
                    std::ostream& out) {
    if (rows.empty()) raise(Errc::EmptyDataset, "no sequence rows to export");
    const int window = static_cast<int>(rows.front().sizes.size());
    std::vector<std::string> cols;
    for (int k = 0; k < window; ++k) {
        cols.push_back("size_" + std::to_string(k));
        if (k + 1 < window) cols.push_back("event_" + std::to_string(k));
    }
    cols.push_back("label");

    const char* nominal =
        "{growing,continuing,shrinking,dissolving,merging,splitting,forming}";
    if (format == DatasetFormat::ArffLike) {
        out << "@relation group_evolution\n";
        for (int k = 0; k < window; ++k) {
            out << "@attribute size_" << k << " numeric\n";
            if (k + 1 < window) out << "@attribute event_" << k << " " << nominal << "\n";
        }
        out << "@attribute label {growing,continuing,shrinking,dissolving,merging,splitting}\n";
        out << "@data\n";
    } else {
        for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << cols[i];
        out << "\n";
    }
    for (const auto& row : rows) {
        for (int k = 0; k < window; ++k) {
            if (k) out << ",";
            out << row.sizes[static_cast<std::size_t>(k)];
            if (k + 1 < window) out << "," << to_string(row.events[static_cast<std::size_t>(k)]);
        }
        out << "," << to_string(row.label) << "\n";
    }
}

std::vector<SequenceRow> read_dataset_csv(std::istream& in) {
    std::vector<SequenceRow> rows;
    std::string line;
    bool header = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (header) {
            header = false;
            continue;
        }
        std::stringstream ss(line);
        std::string cell;
        std::vector<std::string> cells;
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        if (cells.size() < 2 || cells.size() % 2 != 0)
            raise(Errc::BadInput, "malformed dataset row: " + line);
        SequenceRow row;
        const std::size_t window = cells.size() / 2;
        for (std::size_t k = 0; k < window; ++k) {
            row.sizes.push_back(std::stol(cells[2 * k]));
            if (k + 1 < window) {
                auto ev = event_from_string(cells[2 * k + 1]);
                if (!ev) raise(Errc::BadInput, "unknown event '" + cells[2 * k + 1] + "'");
                row.events.push_back(*ev);
            }
        }
        auto label = event_from_string(cells.back());
        if (!label) raise(Errc::BadInput, "unknown label '" + cells.back() + "'");
        row.label = *label;
        rows.push_back(std::move(row));
    }
    return rows;
}

PrfReport prf(const std::vector<std::string>& predictions, const std::vector<std::string>& labels) {
    if (predictions.size() != labels.size())
        raise(Errc::LengthMismatch, "predictions and labels differ in length");
    PrfReport report;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        auto& actual = report.classes[labels[i]];
        ++actual.support;
        if (predictions[i] == labels[i]) {
            ++actual.tp;
        } else {
            ++actual.fn;
            ++report.classes[predictions[i]].fp;
        }
    }
    double weighted = 0.0;
    long total = 0;
    for (auto& [name, c] : report.classes) {
        (void)name;
        c.precision = (c.tp + c.fp) > 0 ? static_cast<double>(c.tp) / (c.tp + c.fp) : 0.0;
        c.recall = (c.tp + c.fn) > 0 ? static_cast<double>(c.tp) / (c.tp + c.fn) : 0.0;
        c.f = (c.precision + c.recall) > 0.0
                  ? 2.0 * c.precision * c.recall / (c.precision + c.recall)
                  : 0.0;
        weighted += c.f * static_cast<double>(c.support);
        total += c.support;
    }
    report.weighted_f = total > 0 ? weighted / static_cast<double>(total) : 0.0;
    return report;
}

} // namespace mlsna
