#ifndef MAMMOAGE_DATASET_HPP
#define MAMMOAGE_DATASET_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "mammoage/csv.hpp"
#include "mammoage/errors.hpp"
#include "mammoage/rng.hpp"

// Mammography manifest model: one record per image, identified by
// (case_id, side, view), carrying status, optional age and pixel dimensions.
// Filenames follow `<case_id>.<SIDE>_<VIEW>.<ext>` with SIDE in {LEFT,RIGHT}
// and VIEW in {CC,MLO}; status comes from the containing directory.

namespace mammoage {

enum class Side { Left, Right };
enum class View { CC, MLO };
enum class Status { Normal, Cancer, Benign };

inline constexpr int kStatusCount = 3;
inline constexpr int kRawAgeMin = 1;   // record invariant: 0 < age < 130
inline constexpr int kRawAgeMax = 129;
inline constexpr int kDefaultMinAge = 18;
inline constexpr int kDefaultMaxAge = 99;
inline constexpr int kDimMin = 1;
inline constexpr int kDimMax = 10000;

inline const char* to_string(Side s) { return s == Side::Left ? "L" : "R"; }
inline const char* to_string(View v) { return v == View::CC ? "CC" : "MLO"; }
inline const char* to_string(Status s) {
    switch (s) {
    case Status::Normal: return "normal";
    case Status::Cancer: return "cancer";
    case Status::Benign: return "benign";
    }
    return "?";
}

inline std::string to_lower(std::string s) {
    for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

inline std::optional<Status> status_from_token(const std::string& token) {
    const std::string t = to_lower(token);
    if (t == "normal") return Status::Normal;
    if (t == "cancer" || t == "malignant") return Status::Cancer;
    if (t == "benign") return Status::Benign;
    return std::nullopt;
}

struct MammogramRecord {
    std::string case_id;
    Side side = Side::Left;
    View view = View::CC;
    Status status = Status::Normal;
    std::optional<int> age;
    std::string path;
    int width = 0;
    int height = 0;

    // Record key used to align manifests with feature matrices.
    std::string id() const {
        std::string out = case_id;
        out += '.';
        out += (side == Side::Left ? "LEFT" : "RIGHT");
        out += '_';
        out += (view == View::CC ? "CC" : "MLO");
        return out;
    }

    bool operator==(const MammogramRecord&) const = default;
};

inline void validate_record(const MammogramRecord& r) {
    if (r.age && (*r.age < kRawAgeMin || *r.age > kRawAgeMax)) {
        throw ParseError("age " + std::to_string(*r.age) + " outside (0, 130) for " + r.id());
    }
    if (r.width < kDimMin || r.width > kDimMax || r.height < kDimMin || r.height > kDimMax) {
        throw ParseError("dimensions " + std::to_string(r.width) + "x" + std::to_string(r.height) +
                         " outside [" + std::to_string(kDimMin) + ", " + std::to_string(kDimMax) +
                         "] for " + r.id());
    }
}

// Parse `<case_id>.<SIDE>_<VIEW>.<ext>`. Status is resolved from status_hint
// and/or the parent directory name; both present and disagreeing is an error.
inline MammogramRecord parse_record(const std::string& path,
                                    std::optional<Status> status_hint = std::nullopt,
                                    std::optional<std::string> age_field = std::nullopt) {
    namespace fs = std::filesystem;
    const fs::path p(path);
    const std::string base = p.filename().string();

    const auto last_dot = base.rfind('.');
    if (last_dot == std::string::npos || last_dot == 0) {
        throw ParseError("filename '" + base + "' lacks an extension");
    }
    const std::string stem = base.substr(0, last_dot);
    const auto sv_dot = stem.rfind('.');
    if (sv_dot == std::string::npos || sv_dot == 0) {
        throw ParseError("filename '" + base + "' does not match <case_id>.<SIDE>_<VIEW>.<ext>");
    }
    const std::string case_id = stem.substr(0, sv_dot);
    const std::string side_view = stem.substr(sv_dot + 1);

    const auto underscore = side_view.find('_');
    if (underscore == std::string::npos) {
        throw ParseError("token '" + side_view + "' is not SIDE_VIEW");
    }
    const std::string side_tok = side_view.substr(0, underscore);
    const std::string view_tok = side_view.substr(underscore + 1);

    MammogramRecord rec;
    rec.case_id = case_id;
    rec.path = path;
    if (side_tok == "LEFT") rec.side = Side::Left;
    else if (side_tok == "RIGHT") rec.side = Side::Right;
    else throw ParseError(side_tok);
    if (view_tok == "CC") rec.view = View::CC;
    else if (view_tok == "MLO") rec.view = View::MLO;
    else throw ParseError(view_tok);

    const std::string parent = p.parent_path().filename().string();
    const std::optional<Status> dir_status = status_from_token(parent);
    if (status_hint && dir_status && *status_hint != *dir_status) {
        throw ConflictError("status hint '" + std::string(to_string(*status_hint)) +
                            "' contradicts directory '" + parent + "' for " + base);
    }
    if (status_hint) rec.status = *status_hint;
    else if (dir_status) rec.status = *dir_status;
    else throw ParseError("no status for '" + base + "' (no hint, directory '" + parent + "' unrecognized)");

    if (age_field) {
        std::string trimmed = *age_field;
        trimmed.erase(0, trimmed.find_first_not_of(" \t"));
        trimmed.erase(trimmed.find_last_not_of(" \t") + 1);
        if (!trimmed.empty()) {
            bool is_int = trimmed.size() > (trimmed[0] == '-' ? 1u : 0u);
            for (std::size_t i = (trimmed[0] == '-' ? 1 : 0); i < trimmed.size(); ++i) {
                if (!std::isdigit(static_cast<unsigned char>(trimmed[i]))) { is_int = false; break; }
            }
            if (is_int) {
                const long v = std::stol(trimmed);
                if (v < kRawAgeMin || v > kRawAgeMax) {
                    throw ParseError("age " + trimmed + " outside (0, 130) for " + base);
                }
                rec.age = static_cast<int>(v);
            }
        }
    }
    return rec;
}

// Keeps records whose age is unknown or inside [min_age, max_age]; order preserved.
inline std::pair<std::vector<MammogramRecord>, std::vector<MammogramRecord>>
filter_outliers(const std::vector<MammogramRecord>& records, int min_age, int max_age) {
    if (min_age >= max_age) {
        throw RangeError("min_age " + std::to_string(min_age) + " must be < max_age " + std::to_string(max_age));
    }
    std::vector<MammogramRecord> kept;
    std::vector<MammogramRecord> removed;
    for (const auto& r : records) {
        if (!r.age || (*r.age >= min_age && *r.age <= max_age)) kept.push_back(r);
        else removed.push_back(r);
    }
    return {std::move(kept), std::move(removed)};
}

struct SummaryRow {
    std::string label;
    std::size_t image_count = 0;
    std::optional<double> age_mean;   // over records with known age
    std::optional<double> age_stddev; // n-1 denominator; absent when <2 known ages
};

struct DatasetSummary {
    std::vector<SummaryRow> per_status; // Normal, Cancer, Benign
    SummaryRow total;
    std::map<int, std::size_t> histogram; // age -> count over known ages
};

inline SummaryRow summarize_group(const std::string& label, std::size_t count,
                                  const std::vector<double>& ages) {
    SummaryRow row;
    row.label = label;
    row.image_count = count;
    if (!ages.empty()) {
        double sum = 0.0;
        for (double a : ages) sum += a;
        const double mean = sum / static_cast<double>(ages.size());
        row.age_mean = mean;
        if (ages.size() >= 2) {
            double ss = 0.0;
            for (double a : ages) ss += (a - mean) * (a - mean);
            row.age_stddev = std::sqrt(ss / static_cast<double>(ages.size() - 1));
        }
    }
    return row;
}

inline DatasetSummary summarize(const std::vector<MammogramRecord>& records) {
    DatasetSummary out;
    std::vector<double> all_ages;
    std::size_t counts[kStatusCount] = {};
    std::vector<double> ages[kStatusCount];
    for (const auto& r : records) {
        const int s = static_cast<int>(r.status);
        ++counts[s];
        if (r.age) {
            ages[s].push_back(static_cast<double>(*r.age));
            all_ages.push_back(static_cast<double>(*r.age));
            ++out.histogram[*r.age];
        }
    }
    for (int s = 0; s < kStatusCount; ++s) {
        out.per_status.push_back(summarize_group(to_string(static_cast<Status>(s)), counts[s], ages[s]));
    }
    out.total = summarize_group("total", records.size(), all_ages);
    return out;
}

// Equal-size per-class sample: k = size of the smallest class among records
// with known age, drawn without replacement, deterministic per seed. Classes
// are emitted in Status order, each preserving the input's relative order.
inline std::vector<MammogramRecord> balanced_sample(const std::vector<MammogramRecord>& records,
                                                    std::uint64_t seed) {
    std::vector<std::size_t> eligible[kStatusCount];
    for (std::size_t i = 0; i < records.size(); ++i) {
        if (records[i].age) eligible[static_cast<int>(records[i].status)].push_back(i);
    }
    std::size_t k = SIZE_MAX;
    for (int s = 0; s < kStatusCount; ++s) {
        if (eligible[s].empty()) {
            throw InputError(std::string("balanced_sample: class '") +
                             to_string(static_cast<Status>(s)) + "' has no records with known age");
        }
        k = std::min(k, eligible[s].size());
    }
    std::vector<MammogramRecord> out;
    out.reserve(k * kStatusCount);
    for (int s = 0; s < kStatusCount; ++s) {
        Rng rng(derive_seed(seed, static_cast<std::uint64_t>(s)));
        auto chosen = rng.sample_without_replacement(eligible[s].size(), k);
        std::sort(chosen.begin(), chosen.end());
        for (std::size_t c : chosen) out.push_back(records[eligible[s][c]]);
    }
    return out;
}

inline constexpr const char* kManifestHeader = "path,case_id,side,view,status,age,width,height";

inline void check_unique_keys(const std::vector<MammogramRecord>& records) {
    std::set<std::string> seen;
    for (const auto& r : records) {
        if (!seen.insert(r.id()).second) {
            throw ConflictError("duplicate (case_id, side, view): " + r.id());
        }
    }
}

inline void write_manifest(const std::vector<MammogramRecord>& records, const std::string& path) {
    check_unique_keys(records);
    for (const auto& r : records) validate_record(r);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path);
    out << kManifestHeader << '\n';
    for (const auto& r : records) {
        csv::write_row(out, {r.path, r.case_id,
                             to_string(r.side),
                             to_string(r.view),
                             to_string(r.status),
                             r.age ? std::to_string(*r.age) : "",
                             std::to_string(r.width), std::to_string(r.height)});
    }
    if (!out) throw IoError("write failed for " + path);
}

inline std::vector<MammogramRecord> load_manifest(const std::string& path) {
    const auto rows = csv::parse_file(path);
    if (rows.empty()) throw FormatError(path + ": empty manifest (missing header)");

    std::ostringstream header;
    for (std::size_t i = 0; i < rows[0].fields.size(); ++i) {
        if (i) header << ',';
        header << rows[0].fields[i];
    }
    if (header.str() != kManifestHeader) {
        throw FormatError(path + ": line 1: bad header '" + header.str() + "'");
    }

    auto fail = [&](std::size_t line, const std::string& what) -> ParseError {
        return ParseError(path + ": line " + std::to_string(line) + ": " + what);
    };

    std::vector<MammogramRecord> records;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto& row = rows[i];
        if (row.fields.size() != 8) {
            throw fail(row.line, "expected 8 fields, got " + std::to_string(row.fields.size()));
        }
        MammogramRecord r;
        r.path = row.fields[0];
        r.case_id = row.fields[1];
        if (row.fields[2] == "L") r.side = Side::Left;
        else if (row.fields[2] == "R") r.side = Side::Right;
        else throw fail(row.line, "side '" + row.fields[2] + "' not in {L,R}");
        if (row.fields[3] == "CC") r.view = View::CC;
        else if (row.fields[3] == "MLO") r.view = View::MLO;
        else throw fail(row.line, "view '" + row.fields[3] + "' not in {CC,MLO}");
        if (auto s = status_from_token(row.fields[4])) r.status = *s;
        else throw fail(row.line, "status '" + row.fields[4] + "' not in {normal,benign,cancer}");
        if (!row.fields[5].empty()) {
            try {
                std::size_t pos = 0;
                const int v = std::stoi(row.fields[5], &pos);
                if (pos != row.fields[5].size()) throw std::invalid_argument("trailing");
                r.age = v;
            } catch (const std::exception&) {
                throw fail(row.line, "age '" + row.fields[5] + "' is not an integer");
            }
        }
        try {
            r.width = std::stoi(row.fields[6]);
            r.height = std::stoi(row.fields[7]);
        } catch (const std::exception&) {
            throw fail(row.line, "bad width/height '" + row.fields[6] + "x" + row.fields[7] + "'");
        }
        try {
            validate_record(r);
        } catch (const ParseError& e) {
            throw fail(row.line, e.what());
        }
        records.push_back(std::move(r));
    }
    check_unique_keys(records);
    return records;
}

} // namespace mammoage

#endif // MAMMOAGE_DATASET_HPP
