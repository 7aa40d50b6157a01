#include "opwork/io/document.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "opwork/operad/builders.hpp"

namespace opwork::io {

namespace {

/// Strict view of a JSON value with its pointer for error messages.
class Reader {
 public:
  Reader(const Json& j, std::string path) : j_(&j), path_(std::move(path)) {}

  const Json& raw() const { return *j_; }
  [[noreturn]] void fail(const std::string& msg) const { throw DocumentError((path_.empty() ? "/" : path_) + ": " + msg); }

  void object(std::initializer_list<const char*> required, std::initializer_list<const char*> optional = {}) const {
    if (!j_->is_object()) fail("expected an object");
    std::set<std::string> allowed;
    for (const char* k : required) {
      allowed.insert(k);
      if (!j_->contains(k)) fail(std::string("missing field \"") + k + "\"");
    }
    for (const char* k : optional) allowed.insert(k);
    for (const auto& [k, v] : j_->items()) {
      if (!allowed.count(k)) fail("unknown field \"" + k + "\"");
    }
  }
  Reader at(const std::string& key) const {
    if (!j_->is_object() || !j_->contains(key)) fail("missing field \"" + key + "\"");
    return Reader(j_->at(key), path_ + "/" + key);
  }
  bool has(const std::string& key) const { return j_->is_object() && j_->contains(key); }
  std::size_t size() const {
    if (!j_->is_array()) fail("expected an array");
    return j_->size();
  }
  Reader at(std::size_t i) const { return Reader(j_->at(i), path_ + "/" + std::to_string(i)); }
  std::vector<Reader> items() const {
    std::vector<Reader> out;
    for (std::size_t i = 0; i < size(); ++i) out.push_back(at(i));
    return out;
  }
  std::vector<std::pair<std::string, Reader>> members() const {
    if (!j_->is_object()) fail("expected an object");
    std::vector<std::pair<std::string, Reader>> out;
    for (const auto& [k, v] : j_->items()) out.emplace_back(k, Reader(v, path_ + "/" + k));
    return out;
  }
  std::int64_t integer(std::int64_t lo, std::int64_t hi) const {
    if (!j_->is_number_integer()) fail("expected an integer");
    const auto v = j_->get<std::int64_t>();
    if (v < lo || v > hi) fail("integer " + std::to_string(v) + " out of range [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    return v;
  }
  std::string string() const {
    if (!j_->is_string()) fail("expected a string");
    return j_->get<std::string>();
  }
  Rational rational() const {
    try {
      return parse_rational(string());
    } catch (const std::invalid_argument& e) {
      fail(e.what());
    }
  }
  int color(const ColorSet& colors) const {
    const std::string id = string();
    for (int c = 0; c < colors.size(); ++c) {
      if (colors.id(c) == id) return c;
    }
    fail("unknown color \"" + id + "\"");
  }
  Seq seq(const ColorSet& colors) const {
    Seq s;
    for (const Reader& r : items()) s.push_back(r.color(colors));
    return s;
  }
  Matrix matrix() const {
    object({"rows", "cols", "data"});
    const Index rows = at("rows").integer(0, 1 << 24);
    const Index cols = at("cols").integer(0, 1 << 24);
    const Reader data = at("data");
    if (data.size() != rows) data.fail("expected " + std::to_string(rows) + " rows");
    std::vector<std::vector<SparseVec::Entry>> acc(cols);
    for (Index r = 0; r < rows; ++r) {
      const Reader row = data.at(r);
      if (row.size() != cols) row.fail("expected " + std::to_string(cols) + " entries");
      for (Index c = 0; c < cols; ++c) {
        const Rational v = row.at(c).rational();
        if (!is_zero(v)) acc[c].emplace_back(r, v);
      }
    }
    std::vector<SparseVec> columns;
    for (auto& col : acc) columns.push_back(SparseVec::from_entries(std::move(col)));
    return Matrix::from_columns(rows, std::move(columns));
  }
  SparseVec vector(Index n) const {
    if (size() != n) fail("expected " + std::to_string(n) + " entries");
    std::vector<SparseVec::Entry> acc;
    for (Index i = 0; i < n; ++i) {
      const Rational v = at(i).rational();
      if (!is_zero(v)) acc.emplace_back(i, v);
    }
    return SparseVec::from_entries(std::move(acc));
  }

 private:
  const Json* j_;
  std::string path_;
};

int color_of(const ColorSet& colors, const std::string& id, const Reader& where) {
  for (int c = 0; c < colors.size(); ++c) {
    if (colors.id(c) == id) return c;
  }
  where.fail("unknown color \"" + id + "\"");
}

std::string line_col(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return std::to_string(line) + ":" + std::to_string(col);
}

Json seq_json(const ColorSet& colors, const Seq& s) {
  Json a = Json::array();
  for (int c : s) a.push_back(colors.id(c));
  return a;
}

Json per_color(const ColorSet& colors, const std::vector<Index>& v) {
  Json o = Json::object();
  for (int c = 0; c < colors.size(); ++c) o[colors.id(c)] = v[c];
  return o;
}

OperadData explicit_operad(const Reader& r) {
  r.object({"cap", "colors", "components", "gamma", "units"}, {"name", "nilpotent_degree"});
  std::vector<std::string> ids;
  for (const Reader& c : r.at("colors").items()) ids.push_back(c.string());
  const ColorSet colors(ids);
  if (colors.ids() != ids) r.at("colors").fail("colors must be sorted and distinct");
  OperadData op(colors, static_cast<int>(r.at("cap").integer(1, 12)));
  if (r.has("name")) op.set_name(r.at("name").string());
  if (r.has("nilpotent_degree")) op.set_nilpotent_degree(static_cast<int>(r.at("nilpotent_degree").integer(1, 12)));
  for (const Reader& c : r.at("components").items()) {
    c.object({"inputs", "output", "dim", "action"}, {"labels"});
    const Seq x = c.at("inputs").seq(colors);
    if (x.empty() || static_cast<int>(x.size()) > op.cap()) c.at("inputs").fail("arity out of range");
    if (!is_sorted_seq(x)) c.at("inputs").fail("inputs must be an orbit representative (sorted)");
    const int y = c.at("output").color(colors);
    if (op.component(x, y)) c.fail("duplicate component");
    const Index dim = c.at("dim").integer(1, 1 << 20);
    Component comp{PermAction(dim, static_cast<int>(x.size())), {}};
    for (const Reader& g : c.at("action").items()) {
      g.object({"generator", "matrix"});
      const int j = static_cast<int>(g.at("generator").integer(0, static_cast<int>(x.size()) - 2));
      if (x[j] != x[j + 1]) g.at("generator").fail("s_j must swap two inputs of equal color");
      const Matrix m = g.at("matrix").matrix();
      if (m.rows() != dim || m.cols() != dim) g.at("matrix").fail("expected a " + std::to_string(dim) + "x" + std::to_string(dim) + " matrix");
      comp.action.set_generator(j, m);
    }
    for (std::size_t j = 0; j + 1 < x.size(); ++j) {
      if (x[j] == x[j + 1] && !comp.action.has_generator(static_cast<int>(j))) c.at("action").fail("missing generator " + std::to_string(j));
    }
    if (c.has("labels")) {
      for (const Reader& l : c.at("labels").items()) comp.labels.push_back(l.string());
      if (comp.labels.size() != dim) c.at("labels").fail("one label per basis vector expected");
    }
    op.set_component(x, y, std::move(comp));
  }
  const Reader units = r.at("units");
  for (const auto& [id, u] : units.members()) {
    const int y = color_of(colors, id, u);
    const Component* c = op.component(Seq{y}, y);
    if (!c) u.fail("no unary component for the unit");
    op.set_unit(y, u.integer(0, static_cast<std::int64_t>(c->dim()) - 1));
  }
  for (int y = 0; y < colors.size(); ++y) {
    if (!units.has(colors.id(y))) units.fail("missing unit of color \"" + colors.id(y) + "\"");
  }
  for (const Reader& g : r.at("gamma").items()) {
    g.object({"inputs", "output", "blocks", "table"});
    GammaKey key{g.at("inputs").seq(colors), g.at("output").color(colors), {}};
    for (const Reader& b : g.at("blocks").items()) key.zs.push_back(b.seq(colors));
    if (!op.component(key.x, key.y) || key.zs.size() != key.x.size()) g.fail("no such composition");
    for (std::size_t i = 0; i < key.zs.size(); ++i) {
      if (!is_sorted_seq(key.zs[i]) || !op.component(key.zs[i], key.x[i])) g.at("blocks").at(i).fail("block is not a nonzero sorted component");
    }
    const Matrix m = g.at("table").matrix();
    Index cols = 1;
    for (Index d : op.gamma_input_dims(key)) cols *= d;
    if (m.rows() != op.gamma_output_dim(key) || m.cols() != cols) g.at("table").fail("table has the wrong shape");
    op.set_gamma_table(key, m);
  }
  for (const GammaKey& key : op.gamma_keys()) {
    if (!op.gamma_tables().count(key)) r.at("gamma").fail("missing composition table for inputs " + seq_key(colors, key.x));
  }
  return op;
}

}  // namespace

std::string kind_name(Kind k) {
  switch (k) {
    case Kind::operad: return "operad";
    case Kind::colored_space: return "colored-space";
    case Kind::coalgebra: return "coalgebra";
    case Kind::jet: return "jet";
    case Kind::represented_element: return "represented-element";
    case Kind::report: return "report";
  }
  return "?";
}

Document parse(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::string msg = e.what();
    const auto pos = msg.find("syntax error");
    throw DocumentError(line_col(text, e.byte) + ": " + (pos == std::string::npos ? msg : msg.substr(pos)));
  }
  const Reader r(j, "");
  r.object({"format_version", "kind", "payload"});
  if (r.at("format_version").string() != kFormatVersion) r.at("format_version").fail(std::string("unsupported version (expected \"") + kFormatVersion + "\")");
  const std::string kind = r.at("kind").string();
  Document doc;
  bool found = false;
  for (Kind k : {Kind::operad, Kind::colored_space, Kind::coalgebra, Kind::jet, Kind::represented_element, Kind::report}) {
    if (kind_name(k) == kind) {
      doc.kind = k;
      found = true;
    }
  }
  if (!found) r.at("kind").fail("unknown kind \"" + kind + "\"");
  if (!j["payload"].is_object()) r.at("payload").fail("expected an object");
  doc.payload = j["payload"];
  return doc;
}

std::string serialize(const Document& doc) {
  Json j = {{"format_version", kFormatVersion}, {"kind", kind_name(doc.kind)}, {"payload", doc.payload}};
  return j.dump(2) + "\n";
}

Document read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DocumentError(path + ": cannot open");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse(ss.str());
  } catch (const DocumentError& e) {
    throw DocumentError(path + ":" + e.what());
  }
}

void write_file(const std::string& path, const Document& doc) {
  std::ofstream out(path);
  if (!out) throw DocumentError(path + ": cannot write");
  out << serialize(doc);
}

const Json& expect_kind(const Document& doc, Kind k, const std::string& what) {
  if (doc.kind != k) throw DocumentError("/kind: " + what + " must be a " + kind_name(k) + " document, got " + kind_name(doc.kind));
  return doc.payload;
}

Json matrix_json(const Matrix& m) {
  std::vector<std::vector<std::string>> data(m.rows(), std::vector<std::string>(m.cols(), "0/1"));
  for (Index c = 0; c < m.cols(); ++c) {
    for (const auto& [r, v] : m.column(c).entries()) data[r][c] = to_string(v);
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", data}};
}

Json vector_json(const SparseVec& v, Index n) {
  std::vector<std::string> out(n, "0/1");
  for (const auto& [i, c] : v.entries()) out.at(i) = to_string(c);
  return out;
}

OperadRef load_operad(const Json& payload) {
  const Reader r(payload, "/payload");
  OperadRef ref;
  ref.payload = payload;
  if (r.has("builtin")) {
    r.object({"builtin"});
    const Reader b = r.at("builtin");
    b.object({"name", "cap"});
    const int cap = static_cast<int>(b.at("cap").integer(1, 10));
    try {
      ref.op = std::make_shared<OperadData>(build_builtin(b.at("name").string(), cap));
    } catch (const std::invalid_argument& e) {
      b.at("name").fail(e.what());
    }
  } else {
    ref.op = std::make_shared<OperadData>(explicit_operad(r));
  }
  return ref;
}

Json operad_payload(const OperadData& op) {
  if (op.has_gamma_rule()) return Json{{"builtin", {{"name", op.name()}, {"cap", op.cap()}}}};
  const ColorSet& colors = op.colors();
  Json comps = Json::array();
  for (const auto& [key, comp] : op.components()) {
    if (comp.dim() == 0) continue;
    Json action = Json::array();
    for (const auto& [j, g] : comp.action.generators()) action.push_back({{"generator", j}, {"matrix", matrix_json(g)}});
    Json c = {{"inputs", seq_json(colors, key.x)}, {"output", colors.id(key.y)}, {"dim", comp.dim()}, {"action", action}};
    if (!comp.labels.empty()) c["labels"] = comp.labels;
    comps.push_back(c);
  }
  Json units = Json::object();
  for (int y = 0; y < colors.size(); ++y) units[colors.id(y)] = op.unit_index(y);
  Json gamma = Json::array();
  for (const GammaKey& key : op.gamma_keys()) {
    Json blocks = Json::array();
    for (const Seq& z : key.zs) blocks.push_back(seq_json(colors, z));
    gamma.push_back({{"inputs", seq_json(colors, key.x)}, {"output", colors.id(key.y)}, {"blocks", blocks}, {"table", matrix_json(op.gamma_table(key))}});
  }
  Json out = {{"cap", op.cap()}, {"colors", colors.ids()}, {"components", comps}, {"units", units}, {"gamma", gamma}};
  if (!op.name().empty()) out["name"] = op.name();
  if (op.nilpotent_degree()) out["nilpotent_degree"] = *op.nilpotent_degree();
  return out;
}

SpaceSpec load_space(const Json& payload) {
  const Reader r(payload, "/payload");
  r.object({"colors", "dims"});
  std::vector<std::string> ids;
  for (const Reader& c : r.at("colors").items()) ids.push_back(c.string());
  SpaceSpec s{ColorSet(ids), {}};
  if (s.colors.ids() != ids) r.at("colors").fail("colors must be sorted and distinct");
  const Reader dims = r.at("dims");
  for (const auto& [id, d] : dims.members()) {
    if (!std::count(ids.begin(), ids.end(), id)) d.fail("unknown color");
  }
  for (const auto& id : ids) s.dims.push_back(dims.at(id).integer(0, 1 << 16));
  return s;
}

Json space_payload(const ColorSet& colors, const std::vector<Index>& dims) { return Json{{"colors", colors.ids()}, {"dims", per_color(colors, dims)}}; }

std::vector<Index> color_dims(const OperadData& op, const Json& j, const std::string& where) {
  const Reader r(j, where);
  std::vector<Index> out;
  for (const auto& [id, d] : r.members()) color_of(op.colors(), id, d);
  for (int c = 0; c < op.ncolors(); ++c) out.push_back(r.at(op.colors().id(c)).integer(0, 1 << 16));
  return out;
}

CoalgebraRef load_coalgebra(const Json& payload) {
  const Reader r(payload, "/payload");
  r.object({"operad", "cap", "dims", "maps"});
  CoalgebraRef ref{load_operad(payload.at("operad")), nullptr};
  const OperadData& op = *ref.operad.op;
  const int cap = static_cast<int>(r.at("cap").integer(1, op.cap()));
  const std::vector<Index> dims = color_dims(op, payload.at("dims"), "/payload/dims");
  auto d = std::make_shared<StructureMaps>(op, dims, cap, StructureMaps::Kind::coalgebra);
  for (const Reader& m : r.at("maps").items()) {
    m.object({"inputs", "output", "basis", "matrix"});
    const Seq x = m.at("inputs").seq(op.colors());
    const int y = m.at("output").color(op.colors());
    const Component* comp = op.component(x, y);
    if (!comp || !is_sorted_seq(x) || static_cast<int>(x.size()) > cap) m.fail("no such component within the cap");
    const Index k = m.at("basis").integer(0, static_cast<std::int64_t>(comp->dim()) - 1);
    if (d->has(x, y, k)) m.fail("duplicate map");
    const Matrix mat = m.at("matrix").matrix();
    if (mat.rows() != tensor_size(tensor_dims(x, dims)) || mat.cols() != dims[y]) m.at("matrix").fail("matrix has the wrong shape");
    d->set(x, y, k, mat);
  }
  try {
    d->complete_by_equivariance();
  } catch (const std::exception& e) {
    r.at("maps").fail(e.what());
  }
  ref.d = std::move(d);
  return ref;
}

Json coalgebra_payload(const StructureMaps& d, const Json& operad) {
  const OperadData& op = d.operad();
  Json maps = Json::array();
  for (const auto& [key, comp] : op.components()) {
    if (comp.dim() == 0 || static_cast<int>(key.x.size()) > d.cap()) continue;
    for (Index k : module_generators(comp)) {
      maps.push_back({{"inputs", seq_json(op.colors(), key.x)}, {"output", op.colors().id(key.y)}, {"basis", k}, {"matrix", matrix_json(d.get(key.x, key.y, k))}});
    }
  }
  return Json{{"operad", operad}, {"cap", d.cap()}, {"dims", per_color(op.colors(), d.dims())}, {"maps", maps}};
}

JetRef load_jet(const Json& payload) {
  const Reader r(payload, "/payload");
  r.object({"operad", "target", "color", "cap", "values"});
  OperadRef operad = load_operad(payload.at("operad"));
  const OperadData& op = *operad.op;
  const std::vector<Index> c_dims = color_dims(op, payload.at("target"), "/payload/target");
  const int color = r.at("color").color(op.colors());
  const int cap = static_cast<int>(r.at("cap").integer(1, op.cap()));
  std::map<Seq, std::map<Index, SparseVec>> values;
  for (const Reader& v : r.at("values").items()) {
    v.object({"inputs", "basis", "value"});
    const Seq x = v.at("inputs").seq(op.colors());
    const Component* comp = op.component(x, color);
    if (!comp || !is_sorted_seq(x) || static_cast<int>(x.size()) > cap) v.fail("no such component within the cap");
    const Index k = v.at("basis").integer(0, static_cast<std::int64_t>(comp->dim()) - 1);
    if (values[x].count(k)) v.fail("duplicate value");
    values[x][k] = v.at("value").vector(tensor_size(tensor_dims(x, c_dims)));
  }
  try {
    return JetRef{std::move(operad), Jet::from_values(op, c_dims, color, cap, values)};
  } catch (const std::invalid_argument& e) {
    r.at("values").fail(e.what());
  }
}

Json jet_payload(const Jet& f, const Json& operad) {
  const OperadData& op = *f.op;
  Json values = Json::array();
  for (const auto& [x, m] : f.components) {
    bool any = false;
    for (Index k = 0; k < m.cols() && !any; ++k) any = !m.column(k).empty();
    if (!any) continue;
    for (Index k : module_generators(*op.component(x, f.color))) {
      values.push_back({{"inputs", seq_json(op.colors(), x)}, {"basis", k}, {"value", vector_json(m.column(k), m.rows())}});
    }
  }
  return Json{{"operad", operad}, {"target", per_color(op.colors(), f.c_dims)}, {"color", op.colors().id(f.color)}, {"cap", f.cap}, {"values", values}};
}

ElementRef load_element(const Json& payload) {
  const Reader r(payload, "/payload");
  r.object({"coalgebra", "output", "color", "initial"});
  CoalgebraRef co = load_coalgebra(payload.at("coalgebra"));
  const OperadData& op = *co.operad.op;
  const Reader out = r.at("output");
  for (const auto& [id, m] : out.members()) color_of(op.colors(), id, m);
  ColoredMap p;
  for (int c = 0; c < op.ncolors(); ++c) {
    const Reader m = out.at(op.colors().id(c));
    p.maps.push_back(m.matrix());
    if (p.maps.back().cols() != co.d->dims()[c]) m.fail("output map must have one column per state");
  }
  const int color = r.at("color").color(op.colors());
  const SparseVec s0 = r.at("initial").vector(co.d->dims()[color]);
  try {
    return ElementRef{co.operad, lift(co.d, std::move(p), color, s0)};
  } catch (const std::invalid_argument& e) {
    r.fail(e.what());
  }
}

Json element_payload(const RepresentedElement& e, const Json& operad) {
  const OperadData& op = e.operad();
  Json out = Json::object();
  for (int c = 0; c < op.ncolors(); ++c) out[op.colors().id(c)] = matrix_json(e.p.maps[c]);
  return Json{{"coalgebra", coalgebra_payload(*e.d, operad)},
              {"output", out},
              {"color", op.colors().id(e.color)},
              {"initial", vector_json(e.initial, e.state_dims()[e.color])}};
}

OpVector load_operation(const OperadData& op, const Json& j, const std::string& where) {
  const Reader r(j, where);
  r.object({"inputs", "output", "basis"});
  const Seq x = r.at("inputs").seq(op.colors());
  const int y = r.at("output").color(op.colors());
  const Component* comp = x.empty() ? nullptr : op.component(x, y);
  if (!comp) r.fail("no such component");
  const Index k = r.at("basis").integer(0, static_cast<std::int64_t>(comp->dim()) - 1);
  return OpVector{x, y, SparseVec::unit(k)};
}

Json operation_json(const OperadData& op, const OpVector& mu) {
  if (mu.coords.nnz() != 1 || mu.coords.entries().front().second != 1) throw std::invalid_argument("operation_json: not a basis operation");
  return Json{{"inputs", seq_json(op.colors(), mu.seq)}, {"output", op.colors().id(mu.out)}, {"basis", mu.coords.entries().front().first}};
}

Context load_context(const OperadData& op, const std::vector<Index>& c_dims, const Json& j, const std::string& where) {
  const Reader r(j, where);
  r.object({"operation", "slot", "args"});
  Context ctx;
  ctx.mu = load_operation(op, j.at("operation"), where + "/operation");
  const int n = static_cast<int>(ctx.mu.seq.size());
  ctx.slot = static_cast<int>(r.at("slot").integer(0, n - 1));
  const Reader args = r.at("args");
  if (static_cast<int>(args.size()) != n) args.fail("one entry per input expected");
  for (int i = 0; i < n; ++i) {
    const Reader a = args.at(static_cast<std::size_t>(i));
    if (i == ctx.slot) {
      if (!a.raw().is_null()) a.fail("the hole slot takes null");
      ctx.args.emplace_back(op.unit(ctx.mu.seq[i]), 0);
      continue;
    }
    a.object({"operation", "coelement"});
    OpVector lam = load_operation(op, a.raw().at("operation"), where + "/args/" + std::to_string(i) + "/operation");
    if (lam.out != ctx.mu.seq[i]) a.fail("argument color does not match the input");
    const Index size = tensor_size(tensor_dims(lam.seq, c_dims));
    const Index phi = a.at("coelement").integer(0, static_cast<std::int64_t>(size) - 1);
    ctx.args.emplace_back(std::move(lam), phi);
  }
  return ctx;
}

}  // namespace opwork::io
