#include "fer/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "fer/error.hpp"
#include "fer/image_io.hpp"
#include "rng_util.hpp"

namespace fer {

namespace fs = std::filesystem;

namespace {

struct LayoutRules {
    bool has_gaze = false;
};

const std::map<std::string, LayoutRules>& layout_registry() {
    static const std::map<std::string, LayoutRules> registry = {
        {"cfee", {.has_gaze = false}},
        {"rafd", {.has_gaze = true}},
    };
    return registry;
}

bool is_image_file(const fs::path& p) {
    std::string ext = p.extension().string();
    std::transform(ext.begin(), ext.end(), ext.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return ext == ".png" || ext == ".jpg" || ext == ".jpeg";
}

std::vector<std::string> split_tokens(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

}  // namespace

std::vector<std::string> known_layouts() {
    std::vector<std::string> out;
    for (const auto& [id, rules] : layout_registry()) out.push_back(id);
    return out;
}

ScanResult scan_dataset(const fs::path& root, const std::string& layout) {
    const auto it = layout_registry().find(layout);
    if (it == layout_registry().end()) {
        std::string known;
        for (const auto& id : known_layouts()) known += (known.empty() ? "" : ", ") + id;
        throw Error(ErrorCategory::usage, "unknown layout '" + layout + "' (known: " + known + ")");
    }
    const LayoutRules& rules = it->second;
    std::error_code ec;
    if (!fs::is_directory(root, ec)) {
        throw Error(ErrorCategory::io, "dataset root is not a readable directory: " + root.string());
    }

    ScanResult result;
    result.synthetic = fs::exists(root / ".fer_synthetic", ec);

    std::set<std::string> subjects;
    for (const auto& dir : fs::directory_iterator(root)) {
        if (!dir.is_directory()) continue;
        const auto emotion = parse_emotion(dir.path().filename().string());
        if (!emotion) continue;  // unrelated directory
        for (const auto& entry : fs::recursive_directory_iterator(dir.path())) {
            if (!entry.is_regular_file() || !is_image_file(entry.path())) continue;
            const std::string stem = entry.path().stem().string();
            const auto tokens = split_tokens(stem, '_');

            ImageSample sample;
            sample.image_path = entry.path().string();
            sample.dataset_id = layout;
            sample.subject_id = tokens.front();
            sample.emotion = *emotion;
            if (sample.subject_id.empty()) {
                result.warnings.push_back("unparseable filename (empty subject): " +
                                          entry.path().string());
                ++result.skipped;
                continue;
            }
            if (rules.has_gaze) {
                for (std::size_t i = 1; i < tokens.size() && !sample.gaze; ++i) {
                    sample.gaze = parse_gaze(tokens[i]);
                }
                if (!sample.gaze) {
                    result.warnings.push_back("unparseable filename (no gaze token): " +
                                              entry.path().string());
                    ++result.skipped;
                    continue;
                }
            }
            if (!decodes_as_image(entry.path())) {
                result.warnings.push_back("undecodable image skipped: " + entry.path().string());
                ++result.skipped;
                continue;
            }
            subjects.insert(sample.subject_id);
            result.per_class_counts[static_cast<int>(sample.emotion)]++;
            result.samples.push_back(std::move(sample));
        }
    }
    std::sort(result.samples.begin(), result.samples.end(),
              [](const ImageSample& a, const ImageSample& b) { return a.image_path < b.image_path; });
    result.subject_count = static_cast<int>(subjects.size());
    if (result.samples.empty()) {
        result.warnings.push_back("no labeled images found under " + root.string());
    }
    return result;
}

const char* to_string(SplitPolicy p) {
    switch (p) {
        case SplitPolicy::by_image: return "by-image";
        case SplitPolicy::by_subject: return "by-subject";
        case SplitPolicy::full_train: return "full-train";
    }
    return "by-image";
}

std::optional<SplitPolicy> parse_split_policy(std::string_view s) {
    if (s == "by-image") return SplitPolicy::by_image;
    if (s == "by-subject") return SplitPolicy::by_subject;
    if (s == "full-train") return SplitPolicy::full_train;
    return std::nullopt;
}

namespace {

void check_ratios(const SplitRatios& r) {
    if (r.train < 0 || r.val < 0 || r.test < 0 ||
        std::abs(r.train + r.val + r.test - 1.0) > 1e-9) {
        char buf[128];
        std::snprintf(buf, sizeof buf, "ratios must be non-negative and sum to 1, got %g,%g,%g",
                      r.train, r.val, r.test);
        throw Error(ErrorCategory::validation, buf);
    }
}

// floor(ratio*N) per split; leftover images go to the splits with the largest
// fractional parts (ties resolved in train, val, test order).
std::array<std::int64_t, 3> largest_remainder_sizes(std::int64_t n, const SplitRatios& r) {
    const std::array<double, 3> ratios = {r.train, r.val, r.test};
    std::array<std::int64_t, 3> sizes{};
    std::array<double, 3> fracs{};
    std::int64_t assigned = 0;
    for (int i = 0; i < 3; ++i) {
        const double exact = ratios[i] * static_cast<double>(n);
        sizes[i] = static_cast<std::int64_t>(std::floor(exact));
        fracs[i] = exact - static_cast<double>(sizes[i]);
        assigned += sizes[i];
    }
    std::array<int, 3> order = {0, 1, 2};
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return fracs[a] > fracs[b]; });
    for (std::int64_t k = 0; k < n - assigned; ++k) sizes[order[static_cast<std::size_t>(k % 3)]]++;
    return sizes;
}

SplitManifest assemble(const std::vector<ImageSample>& samples,
                       const std::vector<int>& assignment, SplitRatios ratios, SplitPolicy policy,
                       std::uint64_t seed) {
    SplitManifest m;
    m.ratios = ratios;
    m.policy = policy;
    m.seed = seed;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        switch (assignment[i]) {
            case 0: m.train.push_back(samples[i]); break;
            case 1: m.val.push_back(samples[i]); break;
            default: m.test.push_back(samples[i]); break;
        }
    }
    return m;
}

SplitManifest split_by_image(const std::vector<ImageSample>& samples,
                             const std::array<std::int64_t, 3>& sizes, SplitRatios ratios,
                             std::uint64_t seed) {
    std::vector<std::size_t> order(samples.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::mt19937_64 rng(detail::splitmix64(seed));
    detail::deterministic_shuffle(order, rng);

    std::vector<int> assignment(samples.size(), 2);
    std::size_t pos = 0;
    for (int split = 0; split < 3; ++split) {
        for (std::int64_t k = 0; k < sizes[static_cast<std::size_t>(split)]; ++k) {
            assignment[order[pos++]] = split;
        }
    }
    return assemble(samples, assignment, ratios, SplitPolicy::by_image, seed);
}

}  // namespace

SplitManifest make_split(const std::vector<ImageSample>& samples, SplitRatios ratios,
                         SplitPolicy policy, std::uint64_t seed) {
    if (samples.empty()) {
        throw Error(ErrorCategory::validation, "make_split: no samples");
    }

    if (policy == SplitPolicy::full_train) {
        SplitManifest m;
        m.train = samples;
        m.ratios = {1.0, 0.0, 0.0};
        m.policy = policy;
        m.seed = seed;
        return m;
    }

    check_ratios(ratios);
    const std::int64_t n = static_cast<std::int64_t>(samples.size());

    if (policy == SplitPolicy::by_image) {
        return split_by_image(samples, largest_remainder_sizes(n, ratios), ratios, seed);
    }

    // by_subject: whole subjects assigned to the split with the largest
    // remaining image deficit, processed in seeded random order.
    std::vector<std::string> subject_order;
    std::map<std::string, std::vector<std::size_t>> by_subject;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        auto [it, inserted] = by_subject.try_emplace(samples[i].subject_id);
        if (inserted) subject_order.push_back(samples[i].subject_id);
        it->second.push_back(i);
    }
    const std::array<double, 3> ratio_arr = {ratios.train, ratios.val, ratios.test};
    int nonempty_splits = 0;
    for (double r : ratio_arr) nonempty_splits += (r > 0.0) ? 1 : 0;
    if (static_cast<int>(subject_order.size()) < nonempty_splits) {
        throw Error(ErrorCategory::validation,
                    "by-subject split needs at least " + std::to_string(nonempty_splits) +
                        " subjects, got " + std::to_string(subject_order.size()));
    }

    std::mt19937_64 rng(detail::splitmix64(seed));
    detail::deterministic_shuffle(subject_order, rng);

    std::array<double, 3> targets{};
    for (int i = 0; i < 3; ++i) targets[static_cast<std::size_t>(i)] = ratio_arr[static_cast<std::size_t>(i)] * static_cast<double>(n);
    std::array<std::int64_t, 3> counts{};
    std::vector<int> assignment(samples.size(), 0);
    for (const auto& subject : subject_order) {
        int best = 0;
        double best_deficit = -1e300;
        for (int i = 0; i < 3; ++i) {
            if (ratio_arr[static_cast<std::size_t>(i)] <= 0.0) continue;
            const double deficit = targets[static_cast<std::size_t>(i)] - static_cast<double>(counts[static_cast<std::size_t>(i)]);
            if (deficit > best_deficit) {
                best_deficit = deficit;
                best = i;
            }
        }
        const auto& indices = by_subject[subject];
        counts[static_cast<std::size_t>(best)] += static_cast<std::int64_t>(indices.size());
        for (std::size_t idx : indices) assignment[idx] = best;
    }
    return assemble(samples, assignment, ratios, SplitPolicy::by_subject, seed);
}

SplitManifest make_split_counts(const std::vector<ImageSample>& samples,
                                const std::array<std::int64_t, 3>& counts, std::uint64_t seed) {
    if (samples.empty()) {
        throw Error(ErrorCategory::validation, "make_split: no samples");
    }
    const std::int64_t n = static_cast<std::int64_t>(samples.size());
    if (counts[0] + counts[1] + counts[2] != n || counts[0] < 0 || counts[1] < 0 || counts[2] < 0) {
        throw Error(ErrorCategory::validation,
                    "split counts must be non-negative and sum to the sample count");
    }
    SplitRatios ratios{static_cast<double>(counts[0]) / n, static_cast<double>(counts[1]) / n,
                       static_cast<double>(counts[2]) / n};
    return split_by_image(samples, counts, ratios, seed);
}

bool SplitManifest::equals(const SplitManifest& other) const {
    return train == other.train && val == other.val && test == other.test &&
           ratios == other.ratios && policy == other.policy && seed == other.seed;
}

namespace {

constexpr const char* kManifestMagic = "#fer-manifest v1";
constexpr const char* kHeader = "dataset_id,subject_id,emotion,gaze,split,path";

void write_row(std::ostream& os, const ImageSample& s, const char* split) {
    for (const std::string* field : {&s.dataset_id, &s.subject_id}) {
        if (field->find(',') != std::string::npos || field->find('\n') != std::string::npos) {
            throw Error(ErrorCategory::validation, "manifest field contains a separator: " + *field);
        }
    }
    if (s.image_path.find(',') != std::string::npos) {
        throw Error(ErrorCategory::validation, "manifest path contains a comma: " + s.image_path);
    }
    os << s.dataset_id << ',' << s.subject_id << ',' << to_string(s.emotion) << ','
       << (s.gaze ? to_string(*s.gaze) : "") << ',' << split << ',' << s.image_path << '\n';
}

}  // namespace

void save_manifest(const SplitManifest& manifest, const fs::path& path) {
    std::error_code ec;
    if (path.has_parent_path()) fs::create_directories(path.parent_path(), ec);
    std::ofstream os(path, std::ios::binary);  // binary: LF endings everywhere
    if (!os) {
        throw Error(ErrorCategory::io, "cannot write manifest: " + path.string());
    }
    char ratio_buf[96];
    std::snprintf(ratio_buf, sizeof ratio_buf, "%.17g,%.17g,%.17g", manifest.ratios.train,
                  manifest.ratios.val, manifest.ratios.test);
    os << kManifestMagic << '\n';
    os << "#policy=" << to_string(manifest.policy) << '\n';
    os << "#seed=" << manifest.seed << '\n';
    os << "#ratios=" << ratio_buf << '\n';
    os << kHeader << '\n';
    for (const auto& s : manifest.train) write_row(os, s, "train");
    for (const auto& s : manifest.val) write_row(os, s, "val");
    for (const auto& s : manifest.test) write_row(os, s, "test");
    if (!os.good()) {
        throw Error(ErrorCategory::io, "write failed: " + path.string());
    }
}

namespace {

[[noreturn]] void manifest_error(const fs::path& path, int line_no, const std::string& what) {
    throw Error(ErrorCategory::parse,
                path.string() + ":" + std::to_string(line_no) + ": " + what);
}

}  // namespace

SplitManifest load_manifest(const fs::path& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) {
        throw Error(ErrorCategory::io, "cannot read manifest: " + path.string());
    }
    SplitManifest m;
    std::string line;
    int line_no = 0;
    bool have_header = false;
    std::set<std::string> seen_paths;
    std::array<std::set<std::string>, 3> split_paths;
    while (std::getline(is, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '#') {
            if (line.rfind("#policy=", 0) == 0) {
                const auto p = parse_split_policy(line.substr(8));
                if (!p) manifest_error(path, line_no, "unknown policy '" + line.substr(8) + "'");
                m.policy = *p;
            } else if (line.rfind("#seed=", 0) == 0) {
                try {
                    m.seed = std::stoull(line.substr(6));
                } catch (const std::exception&) {
                    manifest_error(path, line_no, "bad seed value");
                }
            } else if (line.rfind("#ratios=", 0) == 0) {
                const auto parts = split_tokens(line.substr(8), ',');
                if (parts.size() != 3) manifest_error(path, line_no, "ratios need 3 values");
                try {
                    m.ratios = {std::stod(parts[0]), std::stod(parts[1]), std::stod(parts[2])};
                } catch (const std::exception&) {
                    manifest_error(path, line_no, "bad ratio value");
                }
            }
            continue;  // other comments (incl. the magic line) are ignored
        }
        if (!have_header) {
            if (line != kHeader) manifest_error(path, line_no, "expected header '" + std::string(kHeader) + "'");
            have_header = true;
            continue;
        }
        const auto cols = split_tokens(line, ',');
        if (cols.size() != 6) {
            manifest_error(path, line_no,
                           "expected 6 columns, got " + std::to_string(cols.size()));
        }
        ImageSample s;
        s.dataset_id = cols[0];
        s.subject_id = cols[1];
        const auto emotion = parse_emotion(cols[2]);
        if (!emotion) manifest_error(path, line_no, "unknown emotion '" + cols[2] + "'");
        s.emotion = *emotion;
        if (!cols[3].empty()) {
            const auto gaze = parse_gaze(cols[3]);
            if (!gaze) manifest_error(path, line_no, "unknown gaze '" + cols[3] + "'");
            s.gaze = gaze;
        }
        int split_idx;
        if (cols[4] == "train") split_idx = 0;
        else if (cols[4] == "val") split_idx = 1;
        else if (cols[4] == "test") split_idx = 2;
        else { manifest_error(path, line_no, "unknown split '" + cols[4] + "'"); }
        s.image_path = cols[5];
        if (s.image_path.empty()) manifest_error(path, line_no, "empty path");

        if (!seen_paths.insert(s.image_path).second) {
            // Same path twice is only legal within one split list... and not even there.
            throw Error(ErrorCategory::validation,
                        path.string() + ":" + std::to_string(line_no) +
                            ": path appears in more than one entry: " + s.image_path);
        }
        split_paths[static_cast<std::size_t>(split_idx)].insert(s.image_path);
        if (!fs::exists(s.image_path)) {
            m.missing_files_warning = true;
            m.missing_paths.push_back(s.image_path);
        }
        switch (split_idx) {
            case 0: m.train.push_back(std::move(s)); break;
            case 1: m.val.push_back(std::move(s)); break;
            default: m.test.push_back(std::move(s)); break;
        }
    }
    if (!have_header) {
        manifest_error(path, line_no, "missing header row");
    }
    return m;
}

}  // namespace fer
