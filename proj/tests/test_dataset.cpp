#include <catch2/catch_amalgamated.hpp>

#include <fstream>

#include "fsts/dataset.hpp"
#include "fsts/default_table.hpp"
#include "fsts/pipeline.hpp"
#include "fixtures.hpp"
#include "helpers.hpp"

using namespace fsts;

TEST_CASE("annotation loading validates bounds and preserves order") {
    auto dir = testutil::scratch_dir("annotations");
    {
        std::ofstream f(dir / "good.json");
        f << R"([{"id":"a","x":1,"y":2,"w":10,"h":5,"kind":"text","text":"HI"},)"
          << R"({"id":"b","x":20,"y":2,"w":10,"h":5,"kind":"non-text"}])";
    }
    auto list = load_annotations((dir / "good.json").string(), 64, 64);
    REQUIRE(list.size() == 2);
    CHECK(list[0].id == "a");
    CHECK(list[0].kind == RegionKind::Text);
    CHECK(list[0].text == "HI");
    CHECK(list[1].id == "b");
    CHECK(list[1].kind == RegionKind::NonText);

    {
        std::ofstream f(dir / "oob.json");
        f << R"([{"id":"wide","x":60,"y":2,"w":10,"h":5,"kind":"text"}])";
    }
    REQUIRE_THROWS_WITH(load_annotations((dir / "oob.json").string(), 64, 64),
                        Catch::Matchers::ContainsSubstring("wide"));

    {
        std::ofstream f(dir / "empty.json");
        f << "[]";
    }
    REQUIRE(load_annotations((dir / "empty.json").string(), 64, 64).empty());

    {
        std::ofstream f(dir / "twelve.json");
        f << "[";
        for (int i = 0; i < 12; ++i) {
            if (i) f << ",";
            f << R"({"id":"r)" << i << R"(","x":)" << i * 5
              << R"(,"y":1,"w":4,"h":4,"kind":"text"})";
        }
        f << "]";
    }
    auto twelve = load_annotations((dir / "twelve.json").string(), 100, 10);
    REQUIRE(twelve.size() == 12);
    for (int i = 0; i < 12; ++i) REQUIRE(twelve[size_t(i)].id == "r" + std::to_string(i));
}

TEST_CASE("annotation round-trip") {
    std::vector<RegionAnnotation> list = {
        {"a", {1, 2, 3, 4}, RegionKind::Text, "X"},
        {"b", {5, 6, 7, 8}, RegionKind::NonText, ""},
    };
    auto parsed = parse_annotations(serialize_annotations(list));
    REQUIRE(parsed == list);
}

TEST_CASE("edit log corpus loads, groups, and deduplicates") {
    auto dir = testutil::scratch_dir("logs");
    {
        std::ofstream f(dir / "t1.log");
        f << "t1\ts1\tremoval\t2.1\tcontent-aware-fill\titerations=3\n";
        f << "t1\ts1\tremoval\t2.1\tcontent-aware-fill\titerations=3\n";  // duplicate
        f << "t1\ts2\treplacement\t2.1\tsolid-color-fill\tcolor=1,2,3\n";
        f << "# comment\n\n";
    }
    {
        std::ofstream f(dir / "t2.log");
        f << "t2\ts1\tcopy-move\t2.2\tregion-scaling\t\n";
    }
    auto corpus = load_edit_logs(dir);
    REQUIRE(corpus.by_tamperer.size() == 2);
    CHECK(corpus.records == 3);
    CHECK(corpus.duplicates == 1);
    CHECK(corpus.by_tamperer.at("t1").size() == 2);
    CHECK(corpus.by_tamperer.at("t1")[0].params[0] ==
          std::pair<std::string, std::string>{"iterations", "3"});

    {
        std::ofstream f(dir / "bad.log");
        f << "t3\ts1\tunknown-type\t1.1\tx\t\n";
    }
    REQUIRE_THROWS_WITH(load_edit_logs(dir),
                        Catch::Matchers::ContainsSubstring("unknown type_id"));
}

TEST_CASE("malformed log lines report their line number") {
    REQUIRE_THROWS_WITH(parse_edit_log("t1\ts1\tremoval\n"),
                        Catch::Matchers::ContainsSubstring("line 1"));
    REQUIRE_THROWS_WITH(parse_edit_log("# ok\nt1\ts1\tremoval\t2.1\tx\tbroken\n"),
                        Catch::Matchers::ContainsSubstring("line 2"));
}

TEST_CASE("edit log lines round-trip") {
    EditLogRecord r;
    r.tamperer_id = "t9";
    r.sample_id = "s42";
    r.type = TamperType::Insertion;
    r.op_id = "2.2";
    r.variant = "safety-color";
    r.params = {{"light-background", "12,13,14"}, {"mode", "x"}};
    auto parsed = parse_edit_log_line(format_edit_log_line(r), 1);
    REQUIRE(parsed == r);
}

TEST_CASE("write_sample round-trips losslessly and refuses overwrite") {
    auto dir = testutil::scratch_dir("dataset");
    auto fx = testutil::make_source("w1", 999);
    auto pool = testutil::pool_view(std::vector<testutil::SourceFixture>{fx});

    auto res = synthesize_sample(fx.image, {}, uniform_population_model(),
                                 default_parameter_table(), fx.annotations, 21, "w1-0001",
                                 FontLibrary::builtin(), fx.id);
    auto paths = write_sample(dir, "w1-0001", res.tampered, res.mask, res.record);

    auto image = read_png_rgb(paths.image.string());
    REQUIRE(image == res.tampered);
    auto mask = read_png_mask(paths.mask.string());
    REQUIRE(mask == res.mask);
    auto record = parse_record(read_text_file(paths.meta));
    REQUIRE(record.equivalent(res.record));

    REQUIRE_THROWS_WITH(write_sample(dir, "w1-0001", res.tampered, res.mask, res.record),
                        Catch::Matchers::ContainsSubstring("refusing to overwrite"));
    REQUIRE_NOTHROW(write_sample(dir, "w1-0001", res.tampered, res.mask, res.record, true));
}

TEST_CASE("mask PNGs admit only 0 and 255") {
    auto dir = testutil::scratch_dir("maskpx");
    PixelMask m(8, 8);
    m.set(3, 3, true);
    write_png_mask((dir / "m.png").string(), m);
    auto back = read_png_mask((dir / "m.png").string());
    REQUIRE(back == m);

    ImageBuffer gray(4, 4, {128, 128, 128});
    write_png_rgb((dir / "gray.png").string(), gray);
    REQUIRE_THROWS(read_png_mask((dir / "gray.png").string()));
}

TEST_CASE("manifests round-trip") {
    DatasetManifest m;
    m.master_seed = 42;
    m.table = "builtin";
    m.model = "uniform";
    m.samples = {"a", "b"};
    m.sources = {"s1"};
    auto parsed = parse_manifest(serialize_manifest(m));
    CHECK(parsed.master_seed == 42);
    CHECK(parsed.samples == m.samples);
    CHECK(parsed.sources == m.sources);
}

TEST_CASE("load_records orders by id and validates") {
    auto dir = testutil::scratch_dir("records");
    std::filesystem::create_directories(dir / "meta");
    for (const char* id : {"b", "a"}) {
        SampleRecord r;
        r.sample_id = id;
        r.master_seed = 7;
        std::ofstream f(dir / "meta" / (std::string(id) + ".json"));
        f << serialize_record(r);
    }
    auto records = load_records(dir);
    REQUIRE(records.size() == 2);
    CHECK(records[0].sample_id == "a");
    CHECK(records[1].sample_id == "b");

    {
        std::ofstream f(dir / "meta" / "broken.json");
        f << "{ nope";
    }
    REQUIRE_THROWS_WITH(load_records(dir), Catch::Matchers::ContainsSubstring("broken"));
}
