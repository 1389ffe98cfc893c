#pragma once

/*
 * Front-end plumbing shared by the command-line tool and its tests:
 * presets and GCM files, word syntax, table records, JSON/CSV emission,
 * the on-disk cache and report serialization. Everything here is
 * deterministic so that identical jobs give byte-identical output.
 */

#include "json.hpp"
#include "klpar/parabolic.hpp"
#include "klpar/verify.hpp"

#include <cctype>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

namespace klpar::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kCacheVersion = 1;

// ---------------------------------------------------------------- systems

inline std::vector<std::vector<int>> chain_cartan(int n) {
    std::vector<std::vector<int>> a(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
    for (int i = 0; i < n; ++i) {
        a[i][i] = 2;
        if (i + 1 < n) a[i][i + 1] = a[i + 1][i] = -1;
    }
    return a;
}

/// Named presets: An (n>=1), Bn, Cn (n>=2), Dn (n>=4), G2, A1~, A2~.
inline GeneralizedCartanMatrix preset(std::string_view name) {
    if (name == "G2") return GeneralizedCartanMatrix({{2, -3}, {-1, 2}});
    if (name == "A1~") return GeneralizedCartanMatrix({{2, -2}, {-2, 2}});
    if (name == "A2~") return GeneralizedCartanMatrix({{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}});

    auto unknown = [&] {
        return Error(Errc::ParseError, "unknown preset '" + std::string(name) +
                                           "' (known: An, Bn, Cn, Dn, G2, A1~, A2~; use --cartan-file otherwise)");
    };
    if (name.size() < 2 || name.size() > 4) throw unknown();
    const char family = name[0];
    int n = 0;
    for (char c : name.substr(1)) {
        if (!std::isdigit(static_cast<unsigned char>(c))) throw unknown();
        n = n * 10 + (c - '0');
    }
    if (name[1] == '0') throw unknown();

    auto a = chain_cartan(n);
    switch (family) {
        case 'A':
            if (n < 1) throw unknown();
            break;
        case 'B':
        case 'C':
            if (n < 2) throw unknown();
            a[n - 2][n - 1] = -2;
            if (family == 'C') std::swap(a[n - 2][n - 1], a[n - 1][n - 2]);
            break;
        case 'D':
            if (n < 4) throw unknown();
            a[n - 2][n - 1] = a[n - 1][n - 2] = 0;
            a[n - 3][n - 1] = a[n - 1][n - 3] = -1;
            break;
        default:
            throw unknown();
    }
    return GeneralizedCartanMatrix(std::move(a));
}

/// Parses {"rank": n, "cartan": [[...], ...]}; `source` names the input in diagnostics.
inline GeneralizedCartanMatrix parse_gcm_json(const std::string& text, const std::string& source = "<input>") {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(Errc::ParseError, source + ": byte " + std::to_string(e.byte) + ": " + e.what());
    }
    if (!doc.is_object()) throw Error(Errc::MalformedCartan, source + ": top level must be an object");
    if (!doc.contains("cartan")) throw Error(Errc::MalformedCartan, source + ": missing \"cartan\"");
    const auto& rows = doc["cartan"];
    if (!rows.is_array()) throw Error(Errc::MalformedCartan, source + ": \"cartan\" must be an array of rows");

    std::vector<std::vector<int>> a;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (!rows[i].is_array())
            throw Error(Errc::MalformedCartan, source + ": cartan[" + std::to_string(i) + "] is not an array");
        auto& row = a.emplace_back();
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            const auto& v = rows[i][j];
            if (!v.is_number_integer() || v.get<std::int64_t>() < -(1 << 15) || v.get<std::int64_t>() > (1 << 15))
                throw Error(Errc::MalformedCartan, source + ": cartan[" + std::to_string(i) + "][" +
                                                       std::to_string(j) + "] is not a small integer");
            row.push_back(v.get<int>());
        }
    }
    if (doc.contains("rank")) {
        if (!doc["rank"].is_number_integer() || doc["rank"].get<std::int64_t>() != static_cast<std::int64_t>(a.size()))
            throw Error(Errc::MalformedCartan,
                        source + ": \"rank\" does not match the " + std::to_string(a.size()) + " rows given");
    }
    try {
        return GeneralizedCartanMatrix(std::move(a));
    } catch (const Error& e) {
        throw Error(Errc::MalformedCartan, source + ": " + std::string(e.what()).substr(17));
    }
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(Errc::IoError, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_file(const std::string& path, const std::string& contents) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error(Errc::IoError, "cannot write '" + tmp + "'");
        out << contents;
        if (!out) throw Error(Errc::IoError, "write failed for '" + tmp + "'");
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) throw Error(Errc::IoError, "cannot replace '" + path + "': " + ec.message());
}

inline GeneralizedCartanMatrix load_gcm_file(const std::string& path) { return parse_gcm_json(read_file(path), path); }

/// Comma-separated 0-based indices; empty (or blank) string is the empty list.
inline std::vector<int> parse_index_list(std::string_view s, int rank, std::string_view what = "word") {
    std::vector<int> out;
    std::size_t pos = 0;
    auto blank = [](char c) { return c == ' ' || c == '\t'; };
    while (pos < s.size() && blank(s[pos])) ++pos;
    if (pos == s.size()) return out;
    for (;;) {
        while (pos < s.size() && blank(s[pos])) ++pos;
        const std::size_t start = pos;
        long v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + (s[pos] - '0');
            if (v > 1'000'000) throw Error(Errc::ParseError, std::string(what) + " index too large");
            ++pos;
        }
        if (pos == start)
            throw Error(Errc::ParseError, std::string(what) + " '" + std::string(s) + "': expected an index at column " +
                                              std::to_string(start + 1));
        if (v >= rank)
            throw Error(Errc::IndexOutOfRange, std::string(what) + " '" + std::string(s) + "': index " +
                                                   std::to_string(v) + " not below rank " + std::to_string(rank));
        out.push_back(static_cast<int>(v));
        while (pos < s.size() && blank(s[pos])) ++pos;
        if (pos == s.size()) return out;
        if (s[pos] != ',')
            throw Error(Errc::ParseError, std::string(what) + " '" + std::string(s) + "': unexpected '" +
                                              std::string(1, s[pos]) + "' at column " + std::to_string(pos + 1));
        ++pos;
    }
}

inline Element parse_word(const CoxeterSystem& sys, std::string_view s) {
    const auto word = parse_index_list(s, sys.rank(), "word");
    return sys.from_word(std::span<const int>(word));
}

// ---------------------------------------------------------------- polynomials

inline Json laurent_to_json(const LaurentPoly& p) {
    Json coeffs = Json::array();
    for (const auto& c : p.coefficients()) {
        if (c.fits_slong_p())
            coeffs.push_back(c.get_si());
        else
            coeffs.push_back(c.get_str());
    }
    return Json{{"min", p.min_exponent()}, {"coeffs", std::move(coeffs)}};
}

template <class J>
LaurentPoly laurent_from_json(const J& j) {
    if (!j.is_object() || !j.contains("min") || !j.contains("coeffs") || !j["min"].is_number_integer() ||
        !j["coeffs"].is_array())
        throw Error(Errc::ParseError, "polynomial must look like {\"min\": m, \"coeffs\": [...]}");
    std::vector<BigInt> coeffs;
    for (const auto& c : j["coeffs"]) {
        if (c.is_number_integer())
            coeffs.emplace_back(static_cast<long>(c.template get<std::int64_t>()));
        else if (c.is_string())
            try {
                coeffs.emplace_back(c.template get<std::string>());
            } catch (const std::invalid_argument&) {
                throw Error(Errc::ParseError, "bad coefficient '" + c.template get<std::string>() + "'");
            }
        else
            throw Error(Errc::ParseError, "coefficients must be integers or decimal strings");
    }
    const bool canonical =
        coeffs.empty() ? j["min"].template get<int>() == 0 : (coeffs.front() != 0 && coeffs.back() != 0);
    if (!canonical) throw Error(Errc::ParseError, "polynomial is not in trimmed form");
    return LaurentPoly::from_coefficients(j["min"].template get<int>(), std::move(coeffs));
}

// ---------------------------------------------------------------- jobs

enum class Variant { P, Q, P_parabolic, Q_parabolic };

constexpr std::string_view to_string(Variant v) noexcept {
    switch (v) {
        case Variant::P: return "P";
        case Variant::Q: return "Q";
        case Variant::P_parabolic: return "P-parabolic";
        case Variant::Q_parabolic: return "Q-parabolic";
    }
    return "?";
}

inline Variant parse_variant(std::string_view s) {
    for (auto v : {Variant::P, Variant::Q, Variant::P_parabolic, Variant::Q_parabolic})
        if (to_string(v) == s) return v;
    throw Error(Errc::ParseError, "variant must be P, Q, P-parabolic or Q-parabolic, got '" + std::string(s) + "'");
}

constexpr bool is_parabolic(Variant v) noexcept { return v == Variant::P_parabolic || v == Variant::Q_parabolic; }

enum class Format { json, csv };

inline Format parse_format(std::string_view s) {
    if (s == "json") return Format::json;
    if (s == "csv") return Format::csv;
    throw Error(Errc::ParseError, "format must be json or csv, got '" + std::string(s) + "'");
}

struct Scope {
    enum class Kind { none, pair, below, max_length };
    Kind kind = Kind::none;
    std::string y, w;  // words as given
    int max_length = 0;

    static Scope pair(std::string y, std::string w) { return {Kind::pair, std::move(y), std::move(w), 0}; }
    static Scope below(std::string w) { return {Kind::below, "", std::move(w), 0}; }
    static Scope up_to(int L) { return {Kind::max_length, "", "", L}; }
};

struct JobConfig {
    std::string system_label;
    GeneralizedCartanMatrix cartan;
    std::vector<int> J;
    Marker a = Marker::q;
    Variant variant = Variant::P;
    Scope scope;
    Format format = Format::json;
    std::optional<std::string> cache_path;
    std::size_t wj_cap = kDefaultParabolicCap;
};

struct Record {
    std::vector<int> y, w;
    int ly = 0, lw = 0;
    Variant variant = Variant::P;
    std::optional<LaurentPoly> poly;  // absent when the pair is not comparable
    std::string flag;

    /// Length-lex on w, then on y.
    auto key() const { return std::tie(lw, w, ly, y); }
    friend bool operator==(const Record&, const Record&) = default;
};

inline std::string word_string(const std::vector<int>& word) {
    std::string s;
    for (std::size_t i = 0; i < word.size(); ++i) s += (i ? "," : "") + std::to_string(word[i]);
    return s;
}

inline Json record_to_json(const Record& r) {
    Json j{{"y", word_string(r.y)}, {"w", word_string(r.w)}, {"ly", r.ly}, {"lw", r.lw},
           {"variant", std::string(to_string(r.variant))}};
    j["poly"] = r.poly ? laurent_to_json(*r.poly) : Json(nullptr);
    if (!r.flag.empty()) j["flag"] = r.flag;
    return j;
}

template <class J>
Record record_from_json(const J& j) {
    auto field = [&](const char* name) -> const J& {
        if (!j.is_object() || !j.contains(name))
            throw Error(Errc::ParseError, std::string("record lacks \"") + name + "\"");
        return j[name];
    };
    auto word = [](const std::string& s) {
        std::vector<int> out = parse_index_list(s, 1'000'001, "word");
        return out;
    };
    Record r;
    r.y = word(field("y").template get<std::string>());
    r.w = word(field("w").template get<std::string>());
    r.ly = field("ly").template get<int>();
    r.lw = field("lw").template get<int>();
    r.variant = parse_variant(field("variant").template get<std::string>());
    if (!field("poly").is_null()) r.poly = laurent_from_json(field("poly"));
    if (j.contains("flag")) r.flag = j["flag"].template get<std::string>();
    return r;
}

/// JSON array with one record per line.
inline std::string emit_json(const std::vector<Record>& records) {
    if (records.empty()) return "[]\n";
    std::string out = "[\n";
    for (std::size_t i = 0; i < records.size(); ++i) {
        out += record_to_json(records[i]).dump();
        out += i + 1 < records.size() ? ",\n" : "\n";
    }
    return out + "]\n";
}

/// Columns y,w,ly,lw,variant,min,coeffs,flag; words are quoted, coefficients joined by ';'.
inline std::string emit_csv(const std::vector<Record>& records) {
    std::string out = "y,w,ly,lw,variant,min,coeffs,flag\n";
    for (const auto& r : records) {
        out += "\"" + word_string(r.y) + "\",\"" + word_string(r.w) + "\"," + std::to_string(r.ly) + "," +
               std::to_string(r.lw) + "," + std::string(to_string(r.variant)) + ",";
        if (r.poly) {
            out += std::to_string(r.poly->min_exponent()) + ",";
            const auto& cs = r.poly->coefficients();
            for (std::size_t i = 0; i < cs.size(); ++i) out += (i ? ";" : "") + cs[i].get_str();
        } else {
            out += ",";
        }
        out += "," + r.flag + "\n";
    }
    return out;
}

inline std::string emit(const std::vector<Record>& records, Format f) {
    return f == Format::json ? emit_json(records) : emit_csv(records);
}

// ---------------------------------------------------------------- cache

inline std::string fnv1a_hex(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    std::ostringstream ss;
    ss << std::hex;
    ss.width(16);
    ss.fill('0');
    ss << h;
    return ss.str();
}

/// Header fields identifying a table: ordinary variants ignore J and a.
inline Json cache_identity(const JobConfig& cfg) {
    Json h;
    h["gcm"] = cfg.cartan.rows();
    if (is_parabolic(cfg.variant)) {
        std::vector<int> J = cfg.J;
        std::sort(J.begin(), J.end());
        J.erase(std::unique(J.begin(), J.end()), J.end());
        h["J"] = J;
        h["a"] = std::string(to_string(cfg.a));
    } else {
        h["J"] = Json::array();
        h["a"] = nullptr;
    }
    h["variant"] = std::string(to_string(cfg.variant));
    h["version"] = kCacheVersion;
    return h;
}

/// Polynomial records keyed by (lw, w, ly, y). Only comparable pairs are stored.
class Cache {
public:
    explicit Cache(Json identity) : identity_(std::move(identity)) {}

    const Json& identity() const noexcept { return identity_; }
    std::size_t size() const noexcept { return entries_.size(); }
    const std::map<std::tuple<int, std::vector<int>, int, std::vector<int>>, Record>& entries() const noexcept {
        return entries_;
    }

    const Record* find(const Record& probe) const {
        auto it = entries_.find(probe.key());
        return it == entries_.end() ? nullptr : &it->second;
    }

    /// Adds r unless present; an existing entry with different data means the file was tampered with.
    bool insert(const Record& r) {
        if (!r.poly) return false;
        auto [it, fresh] = entries_.emplace(r.key(), r);
        if (!fresh && !(it->second == r))
            throw Error(Errc::CorruptCache, "conflicting entries for y=[" + word_string(r.y) + "], w=[" +
                                                word_string(r.w) + "]");
        return fresh;
    }

    std::string serialize() const {
        Json entries = Json::array();
        for (const auto& [k, r] : entries_) entries.push_back(record_to_json(r));
        Json header = identity_;
        header["checksum"] = fnv1a_hex(entries.dump());
        std::string out = "{\"header\": " + header.dump() + ",\n\"entries\": [";
        for (std::size_t i = 0; i < entries.size(); ++i) out += (i ? ",\n" : "\n") + entries[i].dump();
        return out + (entries.empty() ? "]}\n" : "\n]}\n");
    }

    /// Parses a cache file and checks it against `expected` (pass nullopt to accept any header).
    static Cache parse(const std::string& text, const std::optional<Json>& expected, const std::string& source) {
        Json doc;
        try {
            doc = Json::parse(text);
        } catch (const nlohmann::json::parse_error& e) {
            throw Error(Errc::CorruptCache, source + ": not valid JSON (byte " + std::to_string(e.byte) + ")");
        }
        if (!doc.is_object() || !doc.contains("header") || !doc.contains("entries") || !doc["header"].is_object() ||
            !doc["entries"].is_array())
            throw Error(Errc::CorruptCache, source + ": expected {\"header\": {...}, \"entries\": [...]}");
        Json header = doc["header"];
        if (!header.contains("checksum") || !header["checksum"].is_string())
            throw Error(Errc::CorruptCache, source + ": header lacks a checksum");
        const std::string checksum = header["checksum"].get<std::string>();
        header.erase("checksum");
        if (expected) {
            for (const auto& [field, value] : expected->items()) {
                if (!header.contains(field) || header[field] != value)
                    throw Error(Errc::CacheHeaderMismatch,
                                source + ": header field \"" + field + "\" is " +
                                    (header.contains(field) ? header[field].dump() : std::string("missing")) +
                                    ", this job needs " + value.dump() + "; refusing to reuse");
            }
            if (header.size() != expected->size())
                throw Error(Errc::CacheHeaderMismatch, source + ": header carries unexpected fields");
        }
        if (fnv1a_hex(doc["entries"].dump()) != checksum)
            throw Error(Errc::CorruptCache, source + ": checksum mismatch");

        Cache cache(header);
        try {
            for (const auto& e : doc["entries"]) {
                Record r = record_from_json(e);
                if (!r.poly || !cache.insert(r))
                    throw Error(Errc::CorruptCache, source + ": duplicate or empty entry");
            }
        } catch (const Error& e) {
            if (e.code() == Errc::CorruptCache) throw;
            throw Error(Errc::CorruptCache, source + ": bad entry: " + e.what());
        } catch (const nlohmann::json::exception& e) {
            throw Error(Errc::CorruptCache, source + ": bad entry: " + e.what());
        }
        return cache;
    }

    static Cache load(const std::string& path, const std::optional<Json>& expected) {
        return parse(read_file(path), expected, path);
    }

private:
    Json identity_;
    std::map<std::tuple<int, std::vector<int>, int, std::vector<int>>, Record> entries_;
};

// ---------------------------------------------------------------- compute

namespace detail {

inline Record make_record(const Element& y, const Element& w, Variant v) {
    Record r;
    r.y = y.word();
    r.w = w.word();
    r.ly = y.length();
    r.lw = w.length();
    r.variant = v;
    return r;
}

}  // namespace detail

/// Builds the table for `cfg`, consulting and extending the cache when one is configured.
inline std::vector<Record> compute_records(const JobConfig& cfg) {
    auto sys = build_system(cfg.cartan);
    for (int j : cfg.J) sys->check_index(j);
    const bool parabolic = is_parabolic(cfg.variant);
    const ParabolicData ctx{normalize_subset(*sys, cfg.J), cfg.a};

    auto in_scope = [&](const Element& x) { return !parabolic || is_min_coset_rep(x, ctx.J); };
    auto require_in_scope = [&](const Element& x) {
        if (parabolic) require_min_coset_rep(x, ctx.J);
    };

    // (y, w) pairs to emit, plus the flagged incomparable one from a --pair scope.
    std::vector<std::pair<Element, Element>> pairs;
    std::vector<Record> flagged;
    auto add_interval = [&](const Element& w) {
        for (const auto& y : bruhat_interval_below(w))
            if (in_scope(y)) pairs.emplace_back(y, w);
    };
    switch (cfg.scope.kind) {
        case Scope::Kind::none:
            throw Error(Errc::ConfigurationInvalid, "compute needs one of --pair, --below or --max-length");
        case Scope::Kind::pair: {
            const Element y = parse_word(*sys, cfg.scope.y);
            const Element w = parse_word(*sys, cfg.scope.w);
            require_in_scope(y);
            require_in_scope(w);
            if (bruhat_leq(y, w)) {
                pairs.emplace_back(y, w);
            } else {
                Record r = detail::make_record(y, w, cfg.variant);
                r.flag = std::string(to_string(Errc::NotComparable));
                flagged.push_back(std::move(r));
            }
            break;
        }
        case Scope::Kind::below: {
            const Element w = parse_word(*sys, cfg.scope.w);
            require_in_scope(w);
            add_interval(w);
            break;
        }
        case Scope::Kind::max_length:
            if (cfg.scope.max_length < 0) throw Error(Errc::ConfigurationInvalid, "--max-length must be >= 0");
            for (const auto& layer : elements_up_to_length(*sys, cfg.scope.max_length))
                for (const auto& w : layer)
                    if (in_scope(w)) add_interval(w);
            break;
    }

    std::optional<Cache> cache;
    const Json identity = cache_identity(cfg);
    if (cfg.cache_path) {
        if (std::filesystem::exists(*cfg.cache_path))
            cache = Cache::load(*cfg.cache_path, identity);
        else
            cache.emplace(identity);
    }

    std::optional<KLTable> table;
    std::optional<ParabolicKLTable> ptable;
    auto value = [&](const Element& y, const Element& w) -> LaurentPoly {
        if (parabolic) {
            if (!ptable) ptable.emplace(sys, ctx);
            return cfg.variant == Variant::P_parabolic ? ptable->kl_polynomial(y, w) : ptable->inverse_kl(y, w);
        }
        if (!table) table.emplace(sys);
        return cfg.variant == Variant::P ? table->kl_polynomial(y, w) : table->inverse_kl(y, w);
    };

    std::vector<Record> out;
    bool grew = false;
    for (const auto& [y, w] : pairs) {
        Record r = detail::make_record(y, w, cfg.variant);
        if (const Record* hit = cache ? cache->find(r) : nullptr) {
            out.push_back(*hit);
            continue;
        }
        r.poly = value(y, w);
        if (cache) grew = cache->insert(r) || grew;
        out.push_back(std::move(r));
    }
    out.insert(out.end(), flagged.begin(), flagged.end());
    std::sort(out.begin(), out.end(), [](const Record& a, const Record& b) { return a.key() < b.key(); });
    out.erase(std::unique(out.begin(), out.end()), out.end());

    if (cache && (grew || !std::filesystem::exists(*cfg.cache_path))) write_file(*cfg.cache_path, cache->serialize());
    return out;
}

inline std::string run_compute(const JobConfig& cfg) { return emit(compute_records(cfg), cfg.format); }

// ---------------------------------------------------------------- info

inline Json group_summary(const CoxeterSystem& sys, const std::vector<int>& J, std::size_t cap) {
    Json g;
    g["generators"] = J;
    const bool finite = is_finite_type(sys.cartan(), J);
    g["finite"] = finite;
    g["order"] = nullptr;
    g["longest_element"] = nullptr;
    if (finite) {
        try {
            auto all = parabolic_subgroup(sys, std::span<const int>(J), cap);
            g["order"] = all.size();
            g["longest_element"] = all.back().word_string();
        } catch (const Error& e) {
            if (e.code() != Errc::ParabolicInfinite) throw;
            g["note"] = "order exceeds --wj-cap " + std::to_string(cap);
        }
    }
    return g;
}

inline Json info_json(const std::string& label, const GeneralizedCartanMatrix& cartan, std::vector<int> J,
                      std::size_t cap) {
    auto sys = build_system(cartan);
    for (int j : J) sys->check_index(j);
    J = normalize_subset(*sys, J);
    std::vector<int> all(static_cast<std::size_t>(sys->rank()));
    for (int i = 0; i < sys->rank(); ++i) all[static_cast<std::size_t>(i)] = i;

    Json info;
    info["system"] = label;
    info["rank"] = sys->rank();
    info["cartan"] = cartan.rows();
    std::vector<std::vector<int>> m(all.size(), std::vector<int>(all.size()));
    for (int i : all)
        for (int j : all) m[i][j] = i == j ? 1 : sys->coxeter_m(i, j);
    info["coxeter_matrix"] = m;
    info["symmetrizable"] = cartan.symmetrizable();
    info["W"] = group_summary(*sys, all, cap);
    info["W_J"] = group_summary(*sys, J, cap);
    return info;
}

inline std::string nonsymmetrizable_warning() {
    return "warning: the Cartan matrix is not symmetrizable; the combinatorial identities still apply, "
           "but the geometric positivity results are stated for symmetrizable matrices";
}

// ---------------------------------------------------------------- reports

inline Json report_to_json(const SuiteReport& r) {
    Json j;
    j["suite"] = r.suite;
    j["system"] = r.system;
    j["J"] = r.J ? Json(*r.J) : Json(nullptr);
    j["a"] = r.a ? Json(std::string(to_string(*r.a))) : Json(nullptr);
    j["max_length"] = r.max_length ? Json(*r.max_length) : Json(nullptr);
    j["attempted"] = r.attempted;
    j["passed"] = r.passed;
    j["ok"] = r.ok();
    Json failures = Json::array();
    for (const auto& f : r.failures) failures.push_back(Json{{"check", f.check}, {"detail", f.detail}});
    j["failures"] = std::move(failures);
    return j;
}

}  // namespace klpar::cli
