#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "corpus.hpp"
#include "opwork/io/document.hpp"
#include "opwork/operad/validate.hpp"

using namespace opwork;
using io::Json;

namespace {

const std::string kDir = OPWORK_CORPUS_DIR;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const io::DocumentError& e) {
    return e.what();
  }
  return "";
}

Json reemit(const io::Document& doc) {
  switch (doc.kind) {
    case io::Kind::operad:
      return io::operad_payload(*io::load_operad(doc.payload).op);
    case io::Kind::colored_space: {
      const auto s = io::load_space(doc.payload);
      return io::space_payload(s.colors, s.dims);
    }
    case io::Kind::coalgebra: {
      const auto c = io::load_coalgebra(doc.payload);
      return io::coalgebra_payload(*c.d, c.operad.payload);
    }
    case io::Kind::jet: {
      const auto j = io::load_jet(doc.payload);
      return io::jet_payload(j.jet, j.operad.payload);
    }
    case io::Kind::represented_element: {
      const auto e = io::load_element(doc.payload);
      return io::element_payload(e.element, e.operad.payload);
    }
    case io::Kind::report:
      return doc.payload;
  }
  return {};
}

const char* kJet = R"({"format_version": "1", "kind": "jet", "payload": {
  "operad": {"builtin": {"name": "com", "cap": 2}}, "target": {"x": 1}, "color": "x", "cap": 1,
  "values": [{"inputs": ["x"], "basis": 0, "value": ["-3/2"]}]}})";

}  // namespace

TEST_CASE("corpus files are the canonical output of the corpus builders") {
  std::set<std::string> on_disk, built;
  for (const auto& entry : std::filesystem::directory_iterator(kDir)) on_disk.insert(entry.path().filename().string());
  for (const auto& [file, doc] : corpus::documents()) {
    CAPTURE(file);
    built.insert(file);
    CHECK(slurp(kDir + "/" + file) == io::serialize(doc));
  }
  CHECK(on_disk == built);
}

TEST_CASE("every corpus document round-trips") {
  for (const auto& entry : std::filesystem::directory_iterator(kDir)) {
    CAPTURE(entry.path().filename().string());
    const std::string text = slurp(entry.path().string());
    const io::Document doc = io::parse(text);
    CHECK(io::serialize(doc) == text);
    CHECK(reemit(doc) == doc.payload);
  }
}

TEST_CASE("loaded documents keep their meaning") {
  const auto elem = io::load_element(io::read_file(kDir + "/matcoef.elem.json").payload);
  const auto jet = io::load_jet(io::read_file(kDir + "/matcoef.jet.json").payload);
  CHECK(jets_equal(expand(elem.element, jet.jet.cap), jet.jet));
  CHECK(elem.element.state_dim() == 3);
  const auto explicit_op = io::load_operad(io::read_file(kDir + "/nilcom2-explicit.op.json").payload);
  CHECK_FALSE(explicit_op.op->has_gamma_rule());
  CHECK(validate(*explicit_op.op).ok());
  const auto corrupt = io::load_operad(io::read_file(kDir + "/as3-corrupt.op.json").payload);
  CHECK_FALSE(validate(*corrupt.op).ok());
  const auto broken = io::load_coalgebra(io::read_file(kDir + "/matcoef-broken.coalg.json").payload);
  CHECK_FALSE(check_coalgebra(*broken.d).ok());
}

TEST_CASE("strict parsing") {
  CHECK_NOTHROW(io::parse(kJet));
  CHECK(io::load_jet(io::parse(kJet).payload).jet.components.at(Seq{0}).at(0, 0) == Rational(-3, 2));

  CHECK(error_of([] { io::parse(R"({"format_version": "1", "kind": "report", "payload": {}, "extra": 1})"); }).find("unknown field \"extra\"") != std::string::npos);
  CHECK(error_of([] { io::parse(R"({"format_version": "2", "kind": "report", "payload": {}})"); }).rfind("/format_version:", 0) == 0);
  CHECK(error_of([] { io::parse(R"({"format_version": "1", "kind": "poem", "payload": {}})"); }).rfind("/kind:", 0) == 0);
  CHECK(error_of([] { io::parse("{\n  \"format_version\": \"1\",\n  \"kind\": }"); }).rfind("3:", 0) == 0);

  auto payload = io::parse(kJet).payload;
  payload["values"][0]["value"][0] = "-6/4";
  CHECK(error_of([&] { io::load_jet(payload); }) == "/payload/values/0/value/0: rational not in lowest terms: '-6/4'");
  payload["values"][0]["value"][0] = 2;
  CHECK(error_of([&] { io::load_jet(payload); }).rfind("/payload/values/0/value/0:", 0) == 0);
  payload = io::parse(kJet).payload;
  payload["values"][0]["value"] = Json::array({"1/1", "1/1"});
  CHECK(error_of([&] { io::load_jet(payload); }).rfind("/payload/values/0/value", 0) == 0);
  payload = io::parse(kJet).payload;
  payload["color"] = "y";
  CHECK(error_of([&] { io::load_jet(payload); }).rfind("/payload/color:", 0) == 0);
  payload = io::parse(kJet).payload;
  payload.erase("cap");
  CHECK(error_of([&] { io::load_jet(payload); }).find("cap") != std::string::npos);

  CHECK(error_of([] { io::load_operad(Json::parse(R"({"builtin": {"name": "lie", "cap": 3}})")); }).rfind("/payload/builtin/name:", 0) == 0);
  CHECK(error_of([] { io::load_operad(Json::parse(R"({"builtin": {"name": "as", "cap": 3, "x": 1}})")); }).find("unknown field") != std::string::npos);
  CHECK(error_of([] { io::load_operad(Json::parse(R"({"builtin": {"name": "as", "cap": -1}})")); }).rfind("/payload/builtin/cap:", 0) == 0);
}

TEST_CASE("kind mismatches and files") {
  const io::Document doc = io::read_file(kDir + "/as.op.json");
  CHECK_THROWS_AS(io::expect_kind(doc, io::Kind::jet, "--jet"), io::DocumentError);
  CHECK_THROWS_AS(io::read_file(kDir + "/missing.json"), io::DocumentError);
  const std::string tmp = (std::filesystem::temp_directory_path() / "opwork_io_test.json").string();
  io::write_file(tmp, doc);
  CHECK(slurp(tmp) == slurp(kDir + "/as.op.json"));
  std::filesystem::remove(tmp);
}

TEST_CASE("operations and contexts") {
  const auto op = io::load_operad(io::read_file(kDir + "/as.op.json").payload);
  const Json j = Json::parse(R"({"inputs": ["x", "x"], "output": "x", "basis": 1})");
  const OpVector mu = io::load_operation(*op.op, j, "--operation");
  CHECK(mu.coords == SparseVec::unit(1));
  CHECK(io::operation_json(*op.op, mu) == j);
  CHECK_THROWS_AS(io::load_operation(*op.op, Json::parse(R"({"inputs": ["x", "x"], "output": "x", "basis": 2})"), "--operation"), io::DocumentError);
  const Json cj = Json::parse(R"({"operation": {"inputs": ["x", "x"], "output": "x", "basis": 0}, "slot": 1,
    "args": [{"operation": {"inputs": ["x"], "output": "x", "basis": 0}, "coelement": 1}, null]})");
  const Context ctx = io::load_context(*op.op, {2}, cj, "--context");
  CHECK(ctx.slot == 1);
  CHECK(ctx.args[0].second == 1);
  CHECK(ctx.weight() == 1);
  Json bad = cj;
  bad["args"][0]["coelement"] = 2;
  CHECK(error_of([&] { io::load_context(*op.op, {2}, bad, "--context"); }).rfind("--context/args/0/coelement:", 0) == 0);
}
