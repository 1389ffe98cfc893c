#include "klpar/cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>

using namespace klpar;
using namespace klpar::cli;

namespace {

Errc code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no error raised";
    return Errc::IoError;
}

JobConfig job(const std::string& type, Variant v, Scope scope) {
    JobConfig c;
    c.system_label = type;
    c.cartan = preset(type);
    c.variant = v;
    c.scope = std::move(scope);
    return c;
}

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("klpar_test_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
                ::testing::UnitTest::GetInstance()->current_test_info()->name());
        std::filesystem::remove_all(path);
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST(Presets, Matrices) {
    EXPECT_EQ(preset("A2").rows(), (std::vector<std::vector<int>>{{2, -1}, {-1, 2}}));
    EXPECT_EQ(preset("B2").rows(), (std::vector<std::vector<int>>{{2, -2}, {-1, 2}}));
    EXPECT_EQ(preset("C2").rows(), (std::vector<std::vector<int>>{{2, -1}, {-2, 2}}));
    EXPECT_EQ(preset("A1~").rows(), (std::vector<std::vector<int>>{{2, -2}, {-2, 2}}));
    EXPECT_EQ(preset("G2").rows(), (std::vector<std::vector<int>>{{2, -3}, {-1, 2}}));
    EXPECT_EQ(preset("D4").rows()[1], (std::vector<int>{-1, 2, -1, -1}));
    EXPECT_EQ(preset("A2~").rank(), 3);
    for (const char* bad : {"E8", "A0", "B1", "D3", "A", "X2", "A02"})
        EXPECT_EQ(code_of([&] { preset(bad); }), Errc::ParseError) << bad;
}

TEST(Presets, FiniteGroupOrders) {
    const std::vector<std::pair<std::string, std::size_t>> orders = {
        {"A1", 2}, {"A3", 24}, {"B3", 48}, {"C3", 48}, {"D4", 192}, {"G2", 12}};
    for (const auto& [name, order] : orders) {
        const auto info = info_json(name, preset(name), {}, kDefaultParabolicCap);
        EXPECT_TRUE(info["W"]["finite"].get<bool>()) << name;
        EXPECT_EQ(info["W"]["order"].get<std::size_t>(), order) << name;
    }
}

TEST(GcmFile, Parsing) {
    EXPECT_EQ(parse_gcm_json(R"({"rank": 2, "cartan": [[2,-1],[-1,2]]})").rank(), 2);
    EXPECT_EQ(code_of([] { parse_gcm_json(R"({"rank": 2, "cartan": [[3,-1],[-1,2]]})"); }), Errc::MalformedCartan);
    EXPECT_EQ(code_of([] { parse_gcm_json(R"({"rank": 3, "cartan": [[2,-1],[-1,2]]})"); }), Errc::MalformedCartan);
    EXPECT_EQ(code_of([] { parse_gcm_json(R"({"cartan": [[2,"x"],[-1,2]]})"); }), Errc::MalformedCartan);
    EXPECT_EQ(code_of([] { parse_gcm_json(R"({"cartan": [[2,-1],[-1,2])"); }), Errc::ParseError);
    try {
        parse_gcm_json("{\"cartan\": [[2,-1],\n[-1,2]", "f.json");
        FAIL();
    } catch (const Error& e) {
        EXPECT_NE(std::string(e.what()).find("f.json: byte"), std::string::npos);
    }
    EXPECT_EQ(code_of([] { load_gcm_file("/nonexistent/gcm.json"); }), Errc::IoError);
}

TEST(Words, Parsing) {
    EXPECT_EQ(parse_index_list("1,0,2,1", 3), (std::vector<int>{1, 0, 2, 1}));
    EXPECT_EQ(parse_index_list(" 1 , 0 ", 3), (std::vector<int>{1, 0}));
    EXPECT_TRUE(parse_index_list("", 3).empty());
    EXPECT_EQ(parse_index_list("10,11", 12), (std::vector<int>{10, 11}));
    EXPECT_EQ(code_of([] { parse_index_list("3", 3); }), Errc::IndexOutOfRange);
    EXPECT_EQ(code_of([] { parse_index_list("1,,2", 3); }), Errc::ParseError);
    EXPECT_EQ(code_of([] { parse_index_list("1;2", 3); }), Errc::ParseError);
    EXPECT_EQ(code_of([] { parse_index_list("-1", 3); }), Errc::ParseError);
}

TEST(Serialization, LaurentRoundTrip) {
    const LaurentPoly q = LaurentPoly::q();
    for (const LaurentPoly& p : {LaurentPoly(), LaurentPoly(1), 1 + q, LaurentPoly::q(-2) - 3 * q}) {
        EXPECT_EQ(laurent_from_json(laurent_to_json(p)), p);
    }
    EXPECT_EQ(laurent_to_json(LaurentPoly()).dump(), R"({"min":0,"coeffs":[]})");
    EXPECT_EQ(laurent_to_json(1 + q).dump(), R"({"min":0,"coeffs":[1,1]})");
    LaurentPoly big = 1;
    for (int i = 0; i < 100; ++i) big *= 1 + q;
    const Json j = laurent_to_json(big);
    EXPECT_TRUE(j["coeffs"][50].is_string());
    EXPECT_EQ(laurent_from_json(j), big);
    EXPECT_EQ(code_of([] { laurent_from_json(Json::parse(R"({"min":0,"coeffs":[0,1]})")); }), Errc::ParseError);
}

TEST(Compute, BelowInS3) {
    const auto records = compute_records(job("A2", Variant::P, Scope::below("0,1,0")));
    ASSERT_EQ(records.size(), 6u);
    for (const auto& r : records) EXPECT_EQ(*r.poly, LaurentPoly(1));
}

TEST(Compute, KnownPair) {
    const auto records = compute_records(job("A3", Variant::P, Scope::pair("1", "1,0,2,1")));
    ASSERT_EQ(records.size(), 1u);
    EXPECT_EQ(laurent_to_json(*records[0].poly)["coeffs"], Json::parse("[1,1]"));
    EXPECT_EQ(records[0].ly, 1);
    EXPECT_EQ(records[0].lw, 4);
}

TEST(Compute, IncomparablePairIsFlagged) {
    const auto records = compute_records(job("A2", Variant::P, Scope::pair("0", "1")));
    ASSERT_EQ(records.size(), 1u);
    EXPECT_FALSE(records[0].poly);
    EXPECT_EQ(records[0].flag, "NotComparable");
}

TEST(Compute, ParabolicScopeIsCosetReps) {
    auto cfg = job("A2", Variant::P_parabolic, Scope::up_to(2));
    cfg.J = {1};
    const auto records = compute_records(cfg);
    std::set<std::vector<int>> words;
    for (const auto& r : records) {
        words.insert(r.w);
        words.insert(r.y);
    }
    EXPECT_EQ(words, (std::set<std::vector<int>>{{}, {0}, {1, 0}}));
    EXPECT_EQ(records.size(), 6u);
    cfg.scope = Scope::pair("1", "1,0");
    EXPECT_EQ(code_of([&] { compute_records(cfg); }), Errc::NotMinCosetRep);
}

TEST(Compute, OrderIsLengthLexOnWThenY) {
    const auto records = compute_records(job("B2", Variant::Q, Scope::up_to(4)));
    for (std::size_t i = 1; i < records.size(); ++i) EXPECT_LT(records[i - 1].key(), records[i].key());
}

TEST(Compute, ConfigErrors) {
    EXPECT_EQ(code_of([] { compute_records(job("A2", Variant::P, Scope{})); }), Errc::ConfigurationInvalid);
    auto cfg = job("A2", Variant::P_parabolic, Scope::up_to(2));
    cfg.J = {2};
    EXPECT_EQ(code_of([&] { compute_records(cfg); }), Errc::IndexOutOfRange);
}

TEST(Emission, DeterministicAndFormatsAgree) {
    auto cfg = job("A3", Variant::Q_parabolic, Scope::up_to(6));
    cfg.J = {0, 2};
    cfg.a = Marker::minus_one;
    const std::string json1 = run_compute(cfg), json2 = run_compute(cfg);
    EXPECT_EQ(json1, json2);
    cfg.format = Format::csv;
    const std::string csv = run_compute(cfg);

    // Same polynomial data, row by row.
    const Json parsed = Json::parse(json1);
    std::istringstream lines(csv);
    std::string line;
    std::getline(lines, line);
    EXPECT_EQ(line, "y,w,ly,lw,variant,min,coeffs,flag");
    std::size_t row = 0;
    while (std::getline(lines, line)) {
        ASSERT_LT(row, parsed.size());
        const Json& rec = parsed[row++];
        std::string coeffs;
        for (const auto& c : rec["poly"]["coeffs"]) coeffs += (coeffs.empty() ? "" : ";") + c.dump();
        const std::string expected = "\"" + rec["y"].get<std::string>() + "\",\"" + rec["w"].get<std::string>() +
                                     "\"," + rec["ly"].dump() + "," + rec["lw"].dump() + ",Q-parabolic," +
                                     rec["poly"]["min"].dump() + "," + coeffs + ",";
        EXPECT_EQ(line, expected);
    }
    EXPECT_EQ(row, parsed.size());
}

TEST(Cache, RoundTripExtendAndHeaderSafety) {
    TempDir dir;
    auto cfg = job("B2", Variant::P, Scope::up_to(2));
    cfg.cache_path = dir.file("b2.json");
    const std::string first = run_compute(cfg);
    const std::string stored = read_file(*cfg.cache_path);

    // Load and store again: byte-identical.
    const Cache loaded = Cache::load(*cfg.cache_path, cache_identity(cfg));
    EXPECT_EQ(loaded.serialize(), stored);
    EXPECT_EQ(run_compute(cfg), first);
    EXPECT_EQ(read_file(*cfg.cache_path), stored);

    // Extending the scope only adds entries.
    cfg.scope = Scope::up_to(4);
    const std::string extended = run_compute(cfg);
    const Cache grown = Cache::load(*cfg.cache_path, cache_identity(cfg));
    EXPECT_GT(grown.size(), loaded.size());
    for (const auto& [key, r] : loaded.entries()) {
        const Record* hit = grown.find(r);
        ASSERT_NE(hit, nullptr);
        EXPECT_EQ(*hit, r);
    }
    auto fresh = cfg;
    fresh.cache_path.reset();
    EXPECT_EQ(run_compute(fresh), extended);

    // Header mismatches are refused.
    auto other = cfg;
    other.cartan = preset("G2");
    EXPECT_EQ(code_of([&] { run_compute(other); }), Errc::CacheHeaderMismatch);
    other = cfg;
    other.variant = Variant::Q;
    EXPECT_EQ(code_of([&] { run_compute(other); }), Errc::CacheHeaderMismatch);
    EXPECT_EQ(code_of([&] { Cache::load(*cfg.cache_path, cache_identity(other)); }), Errc::CacheHeaderMismatch);
}

TEST(Cache, ParabolicHeaderTracksJAndMarker) {
    TempDir dir;
    auto cfg = job("A3", Variant::P_parabolic, Scope::up_to(3));
    cfg.J = {1};
    cfg.cache_path = dir.file("a3.json");
    run_compute(cfg);
    auto other = cfg;
    other.a = Marker::minus_one;
    EXPECT_EQ(code_of([&] { run_compute(other); }), Errc::CacheHeaderMismatch);
    other = cfg;
    other.J = {0};
    EXPECT_EQ(code_of([&] { run_compute(other); }), Errc::CacheHeaderMismatch);
    // J order and repetition do not matter.
    other = cfg;
    other.J = {1, 1};
    EXPECT_NO_THROW(run_compute(other));
}

TEST(Cache, CorruptionIsDetected) {
    TempDir dir;
    auto cfg = job("A2", Variant::Q, Scope::up_to(3));
    cfg.cache_path = dir.file("a2.json");
    run_compute(cfg);
    std::string text = read_file(*cfg.cache_path);
    const auto pos = text.find("\"coeffs\":[1]");
    ASSERT_NE(pos, std::string::npos);
    text.replace(pos, 12, "\"coeffs\":[2]");
    write_file(*cfg.cache_path, text);
    EXPECT_EQ(code_of([&] { run_compute(cfg); }), Errc::CorruptCache);
    write_file(*cfg.cache_path, "{not json");
    EXPECT_EQ(code_of([&] { run_compute(cfg); }), Errc::CorruptCache);
    write_file(*cfg.cache_path, R"({"header": {}, "entries": []})");
    EXPECT_EQ(code_of([&] { run_compute(cfg); }), Errc::CorruptCache);
}

TEST(Info, Summaries) {
    const auto a2 = info_json("A2", preset("A2"), {}, kDefaultParabolicCap);
    EXPECT_EQ(a2["rank"], 2);
    EXPECT_EQ(a2["coxeter_matrix"][0][1], 3);
    EXPECT_TRUE(a2["symmetrizable"].get<bool>());
    const auto aff = info_json("A1~", preset("A1~"), {0}, kDefaultParabolicCap);
    EXPECT_EQ(aff["coxeter_matrix"][0][1], 0);
    EXPECT_FALSE(aff["W"]["finite"].get<bool>());
    EXPECT_TRUE(aff["W_J"]["finite"].get<bool>());
    EXPECT_EQ(aff["W_J"]["longest_element"], "0");
    EXPECT_EQ(code_of([] { info_json("A2", preset("A2"), {5}, 10); }), Errc::IndexOutOfRange);
}
