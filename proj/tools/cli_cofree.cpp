#include <iomanip>
#include <ostream>

#include "cli.hpp"

namespace opwork::cli {

namespace {

struct CofreeFlags {
  std::string in;
  std::string operad;
  std::string context;
  std::string operation;
  std::string output;
  std::string color;
  std::string initial;
  std::size_t limit = 40;
};

std::string tuple_text(const std::vector<Index>& sizes, Index idx) {
  std::vector<Index> digits(sizes.size());
  tensor_digits(sizes, idx, digits);
  std::string s = "(";
  for (std::size_t i = 0; i < digits.size(); ++i) s += (i ? "," : "") + std::to_string(digits[i]);
  return s + ")";
}

std::string vector_text(const SparseVec& v, const std::vector<Index>& sizes) {
  if (v.empty()) return "0";
  std::string s;
  for (const auto& [i, c] : v.entries()) s += (s.empty() ? "" : " + ") + to_string(c) + "*" + tuple_text(sizes, i);
  return s;
}

void print_jet(std::ostream& os, const Jet& f, std::size_t limit) {
  const OperadData& op = *f.op;
  std::size_t nonzero = 0, shown = 0;
  for (const auto& [x, m] : f.components) {
    for (Index k = 0; k < m.cols(); ++k) {
      if (m.column(k).empty()) continue;
      ++nonzero;
      if (shown++ >= limit) continue;
      os << "  " << describe(op, basis_op(x, f.color, k)) << " -> " << vector_text(m.column(k), tensor_dims(x, f.c_dims)) << "\n";
    }
  }
  if (shown > limit) os << "  ... " << shown - limit << " more\n";
  os << "  " << nonzero << " nonzero basis values up to arity " << f.cap << "\n";
}

void print_hankel(std::ostream& os, const HankelReport& h) {
  os << "  cap  rank  split\n";
  for (std::size_t l = 0; l < h.ranks.size(); ++l) os << std::setw(5) << l + 1 << std::setw(6) << h.ranks[l] << std::setw(7) << h.splits[l] << "\n";
  os << "  stabilized: " << (h.stabilized ? "yes" : "no") << "\n";
}

io::Json hankel_json(const HankelReport& h) {
  return io::Json{{"ranks", h.ranks}, {"splits", h.splits}, {"stabilized", h.stabilized}, {"witness_contexts", h.witness_contexts}};
}

/// The jet of a jet document; --operad, when given, replaces the embedded operad.
io::JetRef read_jet(const CofreeFlags& f) {
  const io::Document doc = io::read_file(f.in);
  io::Json payload = io::expect_kind(doc, io::Kind::jet, "--jet");
  if (!f.operad.empty()) {
    if (!payload.is_object()) throw io::DocumentError(f.in + ":/payload: expected an object");
    payload["operad"] = read_operad(f.operad).payload;
  }
  try {
    return io::load_jet(payload);
  } catch (const io::DocumentError& e) {
    throw io::DocumentError(f.in + (f.operad.empty() ? ":" : " (with " + f.operad + "):") + e.what());
  }
}

io::ElementRef read_element(const std::string& path) {
  const io::Document doc = io::read_file(path);
  try {
    return io::load_element(io::expect_kind(doc, io::Kind::represented_element, "--in"));
  } catch (const io::DocumentError& e) {
    throw io::DocumentError(path + ":" + e.what());
  }
}

void print_element(std::ostream& os, const RepresentedElement& e) {
  const OperadData& op = e.operad();
  os << "  states:";
  for (int c = 0; c < op.ncolors(); ++c) os << " " << op.colors().id(c) << "=" << e.state_dims()[c];
  os << ", color " << op.colors().id(e.color) << ", initial " << vector_text(e.initial, {e.state_dims()[e.color]}) << "\n";
}

}  // namespace

void register_cofree_commands(Registry& r) {
  auto f = std::make_shared<CofreeFlags>();

  auto* cc = r.add("check-coalgebra", "counit, equivariance and coassociativity of a coalgebra", [f](const Common& c, Streams& s) {
    const io::Document doc = io::read_file(f->in);
    io::CoalgebraRef co;
    try {
      if (doc.kind == io::Kind::represented_element) {
        if (!doc.payload.contains("coalgebra")) throw io::DocumentError("/payload: missing field \"coalgebra\"");
        co = io::load_coalgebra(doc.payload.at("coalgebra"));
      } else {
        co = io::load_coalgebra(io::expect_kind(doc, io::Kind::coalgebra, "--in"));
      }
    } catch (const io::DocumentError& e) {
      throw io::DocumentError(f->in + ":" + e.what());
    }
    const ValidationReport rep = check_coalgebra(*co.d);
    io::Json failures = io::Json::array();
    for (const auto& x : rep.failures) failures.push_back({{"kind", x.kind}, {"where", x.where}, {"residual", to_string(x.residual)}});
    emit_report(c, s, {{"command", "check-coalgebra"}, {"checks", rep.checks}, {"failures", failures}}, [&](std::ostream& os) {
      os << "check-coalgebra cap " << co.d->cap() << ": " << rep.checks << " checks, " << rep.failures.size() << " failures\n";
      for (std::size_t i = 0; i < rep.failures.size() && i < 20; ++i) os << "  FAIL " << rep.failures[i].kind << " at " << rep.failures[i].where << "\n";
    });
    return rep.ok() ? ok : check_failed;
  });
  cc->add_option("--in", f->in, "coalgebra or represented-element document")->required();

  auto* ex = r.add("expand", "jet of a represented element", [f](const Common& c, Streams& s) {
    const io::ElementRef e = read_element(f->in);
    const int cap = effective_cap(c, e.element.d->cap());
    const Jet jet = expand(e.element, cap);
    if (!emit_document(c, s, {io::Kind::jet, io::jet_payload(jet, e.operad.payload)})) {
      s.out << "expand cap " << cap << ":\n";
      print_jet(s.out, jet, f->limit);
    }
    return ok;
  });
  ex->add_option("--in", f->in, "represented-element document")->required();
  ex->add_option("--limit", f->limit, "values shown in text output");

  auto* tr = r.add("translate", "translate of a jet or represented element along a context", [f](const Common& c, Streams& s) {
    const io::Document doc = io::read_file(f->in);
    const io::Json ctx_json = json_arg(f->context, "--context");
    if (doc.kind == io::Kind::represented_element) {
      const io::ElementRef e = read_element(f->in);
      const Context ctx = io::load_context(e.element.operad(), e.element.c_dims(), ctx_json, "--context");
      const RepresentedElement t = translate(e.element, ctx);
      if (!emit_document(c, s, {io::Kind::represented_element, io::element_payload(t, e.operad.payload)})) {
        s.out << "translate by " << describe(e.element.operad(), ctx) << ": same automaton\n";
        print_element(s.out, t);
      }
      return ok;
    }
    const io::JetRef j = read_jet(*f);
    const Context ctx = io::load_context(*j.jet.op, j.jet.c_dims, ctx_json, "--context");
    const Jet t = translate(j.jet, ctx);
    if (!emit_document(c, s, {io::Kind::jet, io::jet_payload(t, j.operad.payload)})) {
      s.out << "translate by " << describe(*j.jet.op, ctx) << ":\n";
      print_jet(s.out, t, f->limit);
    }
    return ok;
  });
  tr->add_option("--in,--jet", f->in, "jet or represented-element document")->required();
  tr->add_option("--operad", f->operad, "operad document to use instead of the embedded one");
  tr->add_option("--context", f->context, "context as JSON, or @file")->required();
  tr->add_option("--limit", f->limit, "values shown in text output");

  auto* hk = r.add("hankel", "Hankel ranks of a jet", [f](const Common& c, Streams& s) {
    const io::JetRef j = read_jet(*f);
    const HankelReport h = hankel(j.jet);
    emit_report(c, s, {{"command", "hankel"}, {"cap", j.jet.cap}, {"hankel", hankel_json(h)}}, [&](std::ostream& os) {
      os << "hankel, jet cap " << j.jet.cap << ":\n";
      print_hankel(os, h);
    });
    return ok;
  });
  hk->add_option("--in,--jet", f->in, "jet document")->required();
  hk->add_option("--operad", f->operad, "operad document to use instead of the embedded one");

  auto* rz = r.add("realize", "finite presentation of a jet", [f](const Common& c, Streams& s) {
    const io::JetRef j = read_jet(*f);
    const auto result = realize(j.jet);
    if (const auto* fail = std::get_if<RealizationFailure>(&result)) {
      emit_report(c, s, {{"command", "realize"}, {"realized", false}, {"reason", fail->reason}, {"hankel", hankel_json(fail->hankel)}},
                  [&](std::ostream& os) {
                    os << "realize: failed: " << fail->reason << "\n";
                    print_hankel(os, fail->hankel);
                  });
      return check_failed;
    }
    const RepresentedElement& e = std::get<RepresentedElement>(result);
    if (!emit_document(c, s, {io::Kind::represented_element, io::element_payload(e, j.operad.payload)})) {
      s.out << "realize: " << e.state_dim() << " states\n";
      print_element(s.out, e);
    }
    return ok;
  });
  rz->add_option("--in,--jet", f->in, "jet document")->required();
  rz->add_option("--operad", f->operad, "operad document to use instead of the embedded one");

  auto* cm = r.add("comult", "decomposition d_mu(s0) into translates", [f](const Common& c, Streams& s) {
    const io::ElementRef e = read_element(f->in);
    const OperadData& op = e.element.operad();
    const OpVector mu = io::load_operation(op, json_arg(f->operation, "--operation"), "--operation");
    const auto terms = comult(e.element, mu);
    io::Json out = io::Json::array();
    for (const auto& [coef, parts] : terms) {
      io::Json ps = io::Json::array();
      for (const auto& p : parts) ps.push_back({{"color", op.colors().id(p.color)}, {"state", io::vector_json(p.initial, p.state_dims()[p.color])}});
      out.push_back({{"coefficient", to_string(coef)}, {"parts", ps}});
    }
    emit_report(c, s, {{"command", "comult"}, {"operation", io::operation_json(op, mu)}, {"terms", out}}, [&](std::ostream& os) {
      os << "comult along " << describe(op, mu) << ": " << terms.size() << " terms\n";
      for (std::size_t t = 0; t < terms.size() && t < f->limit; ++t) {
        os << "  " << to_string(terms[t].first) << " *";
        for (const auto& p : terms[t].second) os << " [" << op.colors().id(p.color) << " " << vector_text(p.initial, {p.state_dims()[p.color]}) << "]";
        os << "\n";
      }
    });
    return ok;
  });
  cm->add_option("--in", f->in, "represented-element document")->required();
  cm->add_option("--operation", f->operation, "operation as JSON, or @file")->required();
  cm->add_option("--limit", f->limit, "terms shown in text output");

  auto* lf = r.add("lift", "represented element from a coalgebra, output map and initial state", [f](const Common& c, Streams& s) {
    const io::Document doc = io::read_file(f->in);
    io::CoalgebraRef co;
    try {
      co = io::load_coalgebra(io::expect_kind(doc, io::Kind::coalgebra, "--in"));
    } catch (const io::DocumentError& e) {
      throw io::DocumentError(f->in + ":" + e.what());
    }
    const io::Json payload = {{"coalgebra", doc.payload}, {"output", json_arg(f->output, "--output")}, {"color", f->color}, {"initial", json_arg(f->initial, "--initial")}};
    const io::ElementRef e = io::load_element(payload);
    if (!emit_document(c, s, {io::Kind::represented_element, io::element_payload(e.element, co.operad.payload)})) {
      s.out << "lift: counit " << vector_text(counit(e.element), {e.element.c_dims()[e.element.color]}) << "\n";
      print_element(s.out, e.element);
    }
    return ok;
  });
  lf->add_option("--in", f->in, "coalgebra document")->required();
  lf->add_option("--output", f->output, "output map {color: matrix} as JSON, or @file")->required();
  lf->add_option("--color", f->color, "color of the initial state")->required();
  lf->add_option("--initial", f->initial, "initial state as a JSON array of rationals, or @file")->required();
}

}  // namespace opwork::cli
