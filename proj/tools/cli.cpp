#include "cli.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "opwork/functors/analytic.hpp"
#include "opwork/functors/identities.hpp"
#include "opwork/functors/prop.hpp"
#include "opwork/tower/tower.hpp"

namespace opwork::cli {

CLI::App* Registry::add(const std::string& name, const std::string& help, Body body) {
  CLI::App* sub = app.add_subcommand(name, help);
  sub->add_option("--format", common.format, "text or doc")->check(CLI::IsMember({"text", "doc"}));
  sub->add_option("--out", common.out_path, "write the produced document here");
  sub->add_option("--cap", common.cap, "arity cap")->check(CLI::Range(1, 10));
  sub->add_option("--seed", common.seed, "seed for naturality panels");
  sub->callback([this, body] {
    Common& c = common;
    *selected = [body, &c](Streams& s) { return body(c, s); };
  });
  return sub;
}

bool emit_document(const Common& c, Streams& s, const io::Document& doc) {
  if (!c.out_path.empty()) {
    io::write_file(c.out_path, doc);
    if (c.format == "text") s.out << "wrote " << io::kind_name(doc.kind) << " document " << c.out_path << "\n";
    return true;
  }
  if (c.format == "doc") {
    s.out << io::serialize(doc);
    return true;
  }
  return false;
}

void emit_report(const Common& c, Streams& s, const io::Json& payload, const std::function<void(std::ostream&)>& text) {
  if (c.format == "doc") {
    const io::Document doc{io::Kind::report, payload};
    if (c.out_path.empty()) {
      s.out << io::serialize(doc);
    } else {
      io::write_file(c.out_path, doc);
    }
    return;
  }
  text(s.out);
}

io::OperadRef read_operad(const std::string& path) {
  const io::Document doc = io::read_file(path);
  try {
    return io::load_operad(io::expect_kind(doc, io::Kind::operad, "--in"));
  } catch (const io::DocumentError& e) {
    throw io::DocumentError(path + ":" + e.what());
  }
}

std::vector<Index> parse_dims(const OperadData& op, const std::string& text) {
  if (text.empty()) throw UsageError("--dims is required");
  if (text.find('=') == std::string::npos) {
    if (op.ncolors() != 1) throw UsageError("--dims: give one color=count pair per color");
    try {
      std::size_t used = 0;
      const long v = std::stol(text, &used);
      if (used != text.size() || v < 0) throw std::invalid_argument("");
      return {static_cast<Index>(v)};
    } catch (const std::exception&) {
      throw UsageError("--dims: '" + text + "' is not a count");
    }
  }
  std::vector<long> dims(op.ncolors(), -1);
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("--dims: expected color=count, got '" + item + "'");
    const std::string id = item.substr(0, eq);
    int c = -1;
    for (int k = 0; k < op.ncolors(); ++k) {
      if (op.colors().id(k) == id) c = k;
    }
    if (c < 0) throw UsageError("--dims: unknown color '" + id + "'");
    try {
      dims[c] = std::stol(item.substr(eq + 1));
    } catch (const std::exception&) {
      throw UsageError("--dims: bad count in '" + item + "'");
    }
    if (dims[c] < 0) throw UsageError("--dims: negative count in '" + item + "'");
  }
  std::vector<Index> out;
  for (int c = 0; c < op.ncolors(); ++c) {
    if (dims[c] < 0) throw UsageError("--dims: missing color '" + op.colors().id(c) + "'");
    out.push_back(static_cast<Index>(dims[c]));
  }
  return out;
}

io::Json json_arg(const std::string& text, const std::string& flag) {
  std::string body = text;
  if (!text.empty() && text[0] == '@') {
    std::ifstream in(text.substr(1));
    if (!in) throw UsageError(flag + ": cannot open " + text.substr(1));
    std::stringstream ss;
    ss << in.rdbuf();
    body = ss.str();
  }
  try {
    return io::Json::parse(body);
  } catch (const io::Json::parse_error& e) {
    throw io::DocumentError(flag + ": " + e.what());
  }
}

int effective_cap(const Common& c, int fallback) { return c.cap > 0 ? c.cap : fallback; }

namespace {

std::string dims_text(const OperadData& op, const std::vector<Index>& dims) {
  std::string s;
  for (int c = 0; c < op.ncolors(); ++c) s += (c ? "," : "") + op.colors().id(c) + "=" + std::to_string(dims[c]);
  return s;
}

io::Json failures_json(const ValidationReport& r) {
  io::Json a = io::Json::array();
  for (const auto& f : r.failures) a.push_back({{"kind", f.kind}, {"where", f.where}, {"residual", to_string(f.residual)}});
  return a;
}

void print_failures(std::ostream& os, const ValidationReport& r, std::size_t limit = 20) {
  for (std::size_t i = 0; i < r.failures.size() && i < limit; ++i) {
    const auto& f = r.failures[i];
    os << "  FAIL " << f.kind << " at " << f.where << " (residual " << to_string(f.residual) << ")\n";
  }
  if (r.failures.size() > limit) os << "  ... " << r.failures.size() - limit << " more\n";
}

/// Weight-by-color table of a graded space.
void print_graded(std::ostream& os, const OperadData& op, const GradedSpace& g) {
  os << "weight";
  for (int c = 0; c < op.ncolors(); ++c) os << std::setw(10) << op.colors().id(c);
  os << std::setw(10) << "total" << "\n";
  for (int w = 1; w <= g.cap; ++w) {
    os << std::setw(6) << w;
    for (int c = 0; c < op.ncolors(); ++c) os << std::setw(10) << g.dim(w, c);
    os << std::setw(10) << g.weight_totals()[w - 1] << "\n";
  }
}

io::Json graded_json(const OperadData& op, const GradedSpace& g) {
  io::Json by_color = io::Json::object();
  for (int c = 0; c < op.ncolors(); ++c) {
    io::Json a = io::Json::array();
    for (int w = 1; w <= g.cap; ++w) a.push_back(g.dim(w, c));
    by_color[op.colors().id(c)] = a;
  }
  return io::Json{{"by_color", by_color}, {"totals", g.weight_totals()}};
}

Seq parse_seq(const OperadData& op, const std::string& text, const std::string& flag) {
  Seq s;
  std::stringstream ss(text);
  std::string id;
  while (std::getline(ss, id, ',')) {
    int c = -1;
    for (int k = 0; k < op.ncolors(); ++k) {
      if (op.colors().id(k) == id) c = k;
    }
    if (c < 0) throw UsageError(flag + ": unknown color '" + id + "'");
    s.push_back(c);
  }
  if (s.empty()) throw UsageError(flag + ": empty color sequence");
  return s;
}

struct OperadFlags {
  std::string in;
  std::string dims;
  std::string cdims;
  std::string from;
  std::string to;
  int stages = 3;
  bool corrupt_alpha = false;
  bool corrupt_delta = false;
};

}  // namespace

void register_operad_commands(Registry& r) {
  auto f = std::make_shared<OperadFlags>();

  auto* v = r.add("validate-operad", "unit, equivariance and associativity checks", [f](const Common& c, Streams& s) {
    const io::OperadRef op = read_operad(f->in);
    const int cap = effective_cap(c, op.op->cap());
    if (cap > op.op->cap()) throw UsageError("--cap above the operad cap " + std::to_string(op.op->cap()));
    const ValidationReport rep = validate(*op.op, cap);
    emit_report(c, s, {{"command", "validate-operad"}, {"cap", cap}, {"checks", rep.checks}, {"failures", failures_json(rep)}}, [&](std::ostream& os) {
      os << "validate-operad " << (op.op->name().empty() ? f->in : op.op->name()) << " cap " << cap << ": " << rep.checks << " checks, "
         << rep.failures.size() << " failures\n";
      print_failures(os, rep);
    });
    return rep.ok() ? ok : check_failed;
  });
  v->add_option("--in", f->in, "operad document")->required();

  auto* fa = r.add("free-algebra", "graded dimensions of the free algebra P~(A)", [f](const Common& c, Streams& s) {
    const io::OperadRef op = read_operad(f->in);
    const std::vector<Index> dims = parse_dims(*op.op, f->dims);
    const int cap = effective_cap(c, op.op->cap());
    const FreeAlgebra alg(*op.op, dims, cap);
    emit_report(c, s, {{"command", "free-algebra"}, {"cap", cap}, {"dims", dims}, {"graded", graded_json(*op.op, alg.graded())}}, [&](std::ostream& os) {
      os << "free algebra, A: " << dims_text(*op.op, dims) << ", cap " << cap << "\n";
      print_graded(os, *op.op, alg.graded());
    });
    return ok;
  });
  fa->add_option("--in", f->in, "operad document")->required();
  fa->add_option("--dims", f->dims, "dimensions of A per color (x=2,m=1)")->required();

  auto* cw = r.add("cowedge", "graded dimensions of the cowedge P^(C)", [f](const Common& c, Streams& s) {
    const io::OperadRef op = read_operad(f->in);
    const std::vector<Index> dims = parse_dims(*op.op, f->dims);
    const int cap = effective_cap(c, op.op->cap());
    const Cowedge cwg(*op.op, dims, cap);
    emit_report(c, s, {{"command", "cowedge"}, {"cap", cap}, {"dims", dims}, {"graded", graded_json(*op.op, cwg.graded())}}, [&](std::ostream& os) {
      os << "cowedge, C: " << dims_text(*op.op, dims) << ", cap " << cap << "\n";
      print_graded(os, *op.op, cwg.graded());
    });
    return ok;
  });
  cw->add_option("--in", f->in, "operad document")->required();
  cw->add_option("--dims", f->dims, "dimensions of C per color")->required();

  auto* pr = r.add("prop", "component of the associated prop", [f](const Common& c, Streams& s) {
    const io::OperadRef op = read_operad(f->in);
    const Seq z = parse_seq(*op.op, f->from, "--from");
    const Seq x = parse_seq(*op.op, f->to, "--to");
    if (static_cast<int>(z.size()) > op.op->cap()) throw UsageError("--from longer than the operad cap");
    const PropComponent comp(*op.op, z, x);
    io::Json summands = io::Json::array();
    for (const auto& sm : comp.summands()) {
      io::Json blocks = io::Json::array();
      for (const Seq& b : sm.blocks) blocks.push_back(seq_key(op.op->colors(), b));
      summands.push_back({{"blocks", blocks}, {"cosets", sm.cosets.size()}, {"inner", sm.inner}, {"dim", sm.dim()}});
    }
    emit_report(c, s, {{"command", "prop"}, {"from", f->from}, {"to", f->to}, {"dim", comp.dim()}, {"summands", summands}}, [&](std::ostream& os) {
      os << "prop component " << f->from << " -> " << f->to << ": dim " << comp.dim() << "\n";
      for (const auto& sm : comp.summands()) {
        os << "  blocks";
        for (const Seq& b : sm.blocks) os << " " << seq_key(op.op->colors(), b);
        os << ": " << sm.cosets.size() << " cosets x " << sm.inner << " = " << sm.dim() << "\n";
      }
    });
    return ok;
  });
  pr->add_option("--in", f->in, "operad document")->required();
  pr->add_option("--from", f->from, "input colors, comma separated")->required();
  pr->add_option("--to", f->to, "output colors, comma separated")->required();

  auto* id = r.add("identities", "functor identities with a seeded naturality panel", [f](const Common& c, Streams& s) {
    const io::OperadRef op = read_operad(f->in);
    const std::vector<Index> a = parse_dims(*op.op, f->dims);
    const std::vector<Index> cd = f->cdims.empty() ? a : parse_dims(*op.op, f->cdims);
    const int cap = effective_cap(c, std::min(3, op.op->cap()));
    const IdentityReport rep = verify_identities(*op.op, a, cd, cap, c.seed);
    io::Json checks = io::Json::array();
    for (const auto& ch : rep.checks) {
      checks.push_back({{"name", ch.name},
                        {"dims_equal", ch.dims_equal},
                        {"iso", ch.iso},
                        {"maps_tested", ch.maps_tested},
                        {"maps_passed", ch.maps_passed},
                        {"structure_failures", failures_json(ch.structure)},
                        {"ok", ch.ok()}});
    }
    emit_report(c, s, {{"command", "identities"}, {"cap", cap}, {"seed", rep.seed}, {"panel", rep.panel}, {"checks", checks}, {"ok", rep.ok()}},
                [&](std::ostream& os) {
                  os << "identities cap " << cap << " seed " << rep.seed << " panel " << rep.panel << "\n";
                  for (const auto& ch : rep.checks) {
                    os << "  " << (ch.ok() ? "ok  " : "FAIL") << " " << ch.name << ": dims " << (ch.dims_equal ? "equal" : "differ") << ", iso "
                       << (ch.iso ? "yes" : "no") << ", naturality " << ch.maps_passed << "/" << ch.maps_tested << "\n";
                    print_failures(os, ch.structure, 5);
                  }
                });
    return rep.ok() ? ok : check_failed;
  });
  id->add_option("--in", f->in, "operad document")->required();
  id->add_option("--dims", f->dims, "dimensions of A per color")->required();
  id->add_option("--cdims", f->cdims, "dimensions of C per color (default: as A)");

  auto* tw = r.add("tower", "stages Q_0, Q_1, Q_2 of the limit tower", [f](const Common& c, Streams& s) {
    const io::OperadRef op = read_operad(f->in);
    const std::vector<Index> dims = parse_dims(*op.op, f->dims);
    if (!op.op->nilpotent_degree()) throw UsageError("tower needs a nilpotent operad");
    if (f->stages < 1 || f->stages > 3) throw UsageError("--stages must be 1, 2 or 3");
    const TowerOptions opts{f->corrupt_alpha, f->corrupt_delta};
    const auto st = tower(*op.op, dims, f->stages, opts);
    io::Json stages = io::Json::array();
    for (const auto& q : st) stages.push_back({{"k", q.k}, {"dim", q.dim}, {"image_dim", q.image_dim}, {"chi_injective", q.chi_injective}});
    emit_report(c, s, {{"command", "tower"}, {"dims", dims}, {"stages", stages}}, [&](std::ostream& os) {
      os << "tower, C: " << dims_text(*op.op, dims) << "\n  stage       dim     image  chi injective\n";
      for (const auto& q : st) {
        os << "  Q" << q.k << std::setw(13) << q.dim << std::setw(10) << q.image_dim << "  " << (q.k == 0 ? "-" : q.chi_injective ? "yes" : "no") << "\n";
      }
    });
    return ok;
  });
  tw->add_option("--in", f->in, "operad document (nilpotent)")->required();
  tw->add_option("--dims", f->dims, "dimensions of C per color")->required();
  tw->add_option("--stages", f->stages, "number of stages (1..3)");
  tw->add_flag("--corrupt-alpha", f->corrupt_alpha, "plant a rank defect in alpha_1,1");
  tw->add_flag("--corrupt-delta", f->corrupt_delta, "plant an entry defect in the diagonal");

  auto* vc = r.add("verify-comonad", "comonad axioms of the stabilized stage", [f](const Common& c, Streams& s) {
    const io::OperadRef op = read_operad(f->in);
    const std::vector<Index> dims = parse_dims(*op.op, f->dims);
    if (!op.op->nilpotent_degree()) throw UsageError("verify-comonad needs a nilpotent operad");
    const ComonadReport rep = verify_comonad(*op.op, dims, TowerOptions{f->corrupt_alpha, f->corrupt_delta});
    emit_report(c, s,
                {{"command", "verify-comonad"}, {"dims", dims}, {"stabilized", rep.stabilized}, {"dim", rep.dim}, {"checks", rep.checks.checks},
                 {"failures", failures_json(rep.checks)}},
                [&](std::ostream& os) {
                  os << "verify-comonad, C: " << dims_text(*op.op, dims) << ": stabilized " << (rep.stabilized ? "yes" : "no") << ", dim " << rep.dim
                     << ", " << rep.checks.checks << " checks, " << rep.checks.failures.size() << " failures\n";
                  print_failures(os, rep.checks);
                });
    return rep.ok() ? ok : check_failed;
  });
  vc->add_option("--in", f->in, "operad document (nilpotent)")->required();
  vc->add_option("--dims", f->dims, "dimensions of C per color")->required();
  vc->add_flag("--corrupt-alpha", f->corrupt_alpha, "plant a rank defect in alpha_1,1");
  vc->add_flag("--corrupt-delta", f->corrupt_delta, "plant an entry defect in the diagonal");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app("Exact workbench for colored symmetric operads", "opwork");
  app.require_subcommand(1);
  Common common;
  std::function<int(Streams&)> selected;
  Registry reg{app, common, &selected};
  register_operad_commands(reg);
  register_cofree_commands(reg);
  Streams s{out, err};
  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : usage;
  }
  try {
    return selected(s);
  } catch (const io::DocumentError& e) {
    err << "opwork: " << e.what() << "\n";
  } catch (const UsageError& e) {
    err << "opwork: " << e.what() << "\n";
  } catch (const CapExceeded& e) {
    err << "opwork: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    err << "opwork: " << e.what() << "\n";
  }
  return usage;
}

}  // namespace opwork::cli
