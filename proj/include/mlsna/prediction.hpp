#pragma once

#include <array>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "mlsna/evolution.hpp"

namespace mlsna {

/// One classification case: sizes of a group over `window` consecutive
/// frames, the events between them, and the following event as the label.
struct SequenceRow {
    std::vector<long> sizes;        // window entries
    std::vector<EventKind> events;  // window-1 entries
    EventKind label = EventKind::Continuing;
};

/// Slide a window over every chain; a row needs `window` consecutive
/// groups plus a following event. Short chains yield nothing.
std::vector<SequenceRow> extract_sequences(const std::vector<Chain>& chains,
                                           const std::vector<Partition>& partitions,
                                           int window = 4);

enum class DatasetFormat { Csv, ArffLike };

/// Write rows as CSV (header + rows) or an ARFF-style file with nominal
/// attribute declarations. Throws EmptyDataset.
void export_dataset(const std::vector<SequenceRow>& rows, DatasetFormat format, std::ostream& out);

/// Parse back a CSV produced by export_dataset.
std::vector<SequenceRow> read_dataset_csv(std::istream& in);

struct PrfReport {
    struct PerClass {
        long tp = 0, fp = 0, fn = 0;
        long support = 0;
        double precision = 0.0, recall = 0.0, f = 0.0;
    };
    std::map<std::string, PerClass> classes;
    double weighted_f = 0.0; // weights = class support
};

/// One-vs-rest precision/recall/F per class; F = 2PR/(P+R), 0 when P+R = 0.
PrfReport prf(const std::vector<std::string>& predictions, const std::vector<std::string>& labels);

} // namespace mlsna
