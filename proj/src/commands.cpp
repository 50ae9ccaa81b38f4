#include "tsv/commands.hpp"

#include <functional>
#include <map>

#include "tsv/decomp.hpp"
#include "tsv/errors.hpp"
#include "tsv/smith.hpp"

namespace tsv {

using ojson = nlohmann::ordered_json;

namespace {

template <class T>
ojson matrix_data(const Matrix<T>& m) {
  ojson rows = ojson::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    ojson row = ojson::array();
    for (const auto& v : m.row(i)) row.push_back(to_string(v));
    rows.push_back(std::move(row));
  }
  return rows;
}

ojson block_data(const BlockIso& f) {
  return {{"source", f.source().base().name()},
          {"target", f.target().base().name()},
          {"alpha", matrix_data(f.alpha().T())},
          {"beta", matrix_data(f.beta().T())},
          {"gamma", matrix_data(f.gamma().T())},
          {"delta", matrix_data(f.delta().T())},
          {"rho", matrix_data(f.rho())}};
}

void block_lines(Report& r, const BlockIso& f) {
  r.lines.push_back("map: " + f.source().base().name() + " x " + dual(f.source().base()).name() + " -> " +
                    f.target().base().name() + " x " + dual(f.target().base()).name());
  r.lines.push_back("alpha: " + format_matrix(f.alpha().T()));
  r.lines.push_back("beta: " + format_matrix(f.beta().T()));
  r.lines.push_back("gamma: " + format_matrix(f.gamma().T()));
  r.lines.push_back("delta: " + format_matrix(f.delta().T()));
  r.lines.push_back("rho: " + format_matrix(f.rho()));
}

void expect_args(const std::vector<std::string>& args, std::size_t count, const std::string& usage) {
  if (args.size() != count) throw UsageError("usage: tsv " + usage);
}

long parse_long(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    long v = std::stol(text, &used);
    if (used == text.size()) return v;
  } catch (const std::exception&) {
  }
  throw UsageError(what + " must be an integer, got \"" + text + "\"");
}

const char* mark(bool ok) { return ok ? "✓" : "✗"; }

using Handler = std::function<void(const Session&, const std::vector<std::string>&, const CommandOptions&, Report&)>;

void cmd_check(const Session& s, const std::vector<std::string>& args, const CommandOptions&, Report& r) {
  expect_args(args, 0, "check --session <file>");
  r.lines.push_back("session ok: " + std::to_string(s.tori.size()) + " tori, " + std::to_string(s.morphisms.size()) +
                    " morphisms, " + std::to_string(s.block_isos.size()) + " block isomorphisms, extension d=" +
                    std::to_string(s.extension_d));
  r.data["extension_d"] = s.extension_d;
  r.data["tori"] = ojson::array();
  for (const auto& t : s.tori) {
    r.lines.push_back("torus " + t.name() + ": g=" + std::to_string(t.g()) + " J=" + format_matrix(t.J()));
    r.data["tori"].push_back({{"name", t.name()}, {"g", t.g()}, {"J", matrix_data(t.J())}});
  }
  for (const auto& [name, m] : s.morphisms) {
    r.lines.push_back("morphism " + name + ": " + m.source().name() + " -> " + m.target().name() + " T=" +
                      format_matrix(m.T()));
  }
  for (const auto& [name, f] : s.block_isos) r.lines.push_back("block iso " + name + ": " + f.dump());
  r.data["morphisms"] = s.morphisms.size();
  r.data["block_isos"] = s.block_isos.size();
}

void cmd_dual(const Session& s, const std::vector<std::string>& args, const CommandOptions&, Report& r) {
  expect_args(args, 1, "dual <torus> --session <file>");
  ComplexTorus d = dual(s.torus(args[0]));
  r.lines.push_back("dual: " + d.name() + " J=" + format_matrix(d.J()));
  r.data = {{"name", d.name()}, {"J", matrix_data(d.J())}};
}

void hom_report(const ComplexTorus& a, const ComplexTorus& b, const std::string& label, Report& r) {
  auto basis = hom_lattice(a, b);
  r.lines.push_back(label + ": rank " + std::to_string(basis.size()));
  r.data["source"] = a.name();
  r.data["target"] = b.name();
  r.data["rank"] = basis.size();
  r.data["basis"] = ojson::array();
  for (std::size_t i = 0; i < basis.size(); ++i) {
    r.lines.push_back("  e" + std::to_string(i) + " = " + format_matrix(basis[i].T()));
    r.data["basis"].push_back(matrix_data(basis[i].T()));
  }
}

void cmd_hom(const Session& s, const std::vector<std::string>& args, const CommandOptions&, Report& r) {
  expect_args(args, 2, "hom <A> <B> --session <file>");
  ComplexTorus a = s.torus(args[0]), b = s.torus(args[1]);
  hom_report(a, b, "Hom(" + a.name() + ", " + b.name() + ")", r);
}

void cmd_end(const Session& s, const std::vector<std::string>& args, const CommandOptions&, Report& r) {
  expect_args(args, 1, "end <A> --session <file>");
  ComplexTorus a = s.torus(args[0]);
  hom_report(a, a, "End(" + a.name() + ")", r);
}

void cmd_endalg(const Session& s, const std::vector<std::string>& args, const CommandOptions&, Report& r) {
  expect_args(args, 1, "endalg <A> --session <file>");
  EndAlgebra alg = end_algebra(s.torus(args[0]));
  DivisionVerdict v = division_verdict(alg);
  bool checked = verify_certificate(alg, v);
  r.lines.push_back("verdict: " + v.describe() + ", rank " + std::to_string(alg.dim()));
  r.lines.push_back("commutative: " + std::string(alg.commutative() ? "yes" : "no") +
                    ", center dimension " + std::to_string(center_dimension(alg)) +
                    ", semisimple: " + (is_semisimple(alg) ? "yes" : "no"));
  r.lines.push_back("certificate verified: " + std::string(checked ? "yes" : "no"));
  r.data = {{"torus", alg.label()},
            {"rank", alg.dim()},
            {"verdict", to_string(v.tag)},
            {"description", v.describe()},
            {"division", v.is_division()},
            {"certificate_verified", checked}};
  if (!checked) r.exit_code = kExitViolation;
}

void cmd_isogeny(const Session& s, const std::vector<std::string>& args, const CommandOptions& o, Report& r) {
  expect_args(args, 2, "isogeny <A> <B> --session <file> [--bound N]");
  ComplexTorus a = s.torus(args[0]), b = s.torus(args[1]);
  const long bound = o.bound.value_or(3);
  r.data = {{"source", a.name()}, {"target", b.name()}, {"bound", bound}};
  if (auto w = isogeny_witness(a, b, bound)) {
    auto degree = is_isogeny(*w);
    r.lines.push_back("isogeny: " + a.name() + " -> " + b.name() + " T=" + format_matrix(w->T()) + ", degree " +
                      degree->get_str());
    r.data["isogeny"] = true;
    r.data["T"] = matrix_data(w->T());
    r.data["degree"] = degree->get_str();
    return;
  }
  r.exit_code = kExitFalse;
  r.data["isogeny"] = false;
  if (hom_lattice(a, b).empty()) {
    r.lines.push_back("isogeny: none (Hom(" + a.name() + ", " + b.name() + ") = 0)");
    r.data["hom_rank"] = 0;
  } else {
    r.lines.push_back("isogeny: none found with coefficients bounded by " + std::to_string(bound));
  }
}

void cmd_pair(const Session& s, const std::vector<std::string>& args, const CommandOptions&, Report& r) {
  expect_args(args, 1, "pair <A> --session <file>");
  SymplecticPair p = build_pair(s.torus(args[0]));
  r.lines.push_back("pair: " + p.base().name() + " x " + p.base().name() + "^, lattice rank " + std::to_string(p.rank()));
  r.lines.push_back("J_X: " + format_matrix(p.J()));
  r.lines.push_back("omega: " + format_matrix(p.S()));
  r.lines.push_back("psi_L: " + format_matrix(p.psi()));
  r.lines.push_back("Re H: " + format_matrix(p.real_gram()));
  r.data = {{"torus", p.base().name()},
            {"J_X", matrix_data(p.J())},
            {"omega", matrix_data(p.S())},
            {"psi", matrix_data(p.psi())},
            {"real_gram", matrix_data(p.real_gram())}};
}

void cmd_sp_verify(const Session& s, const std::vector<std::string>& args, const CommandOptions&, Report& r) {
  expect_args(args, 1, "sp-verify <blockiso> --session <file>");
  SymplecticVerdict v = is_symplectic(s.block_iso(args[0]));
  r.lines.push_back(std::string("symplectic: ") + (v.symplectic() ? "true" : "false") + " (oracles: dagger " +
                    mark(v.dagger) + " gram " + mark(v.gram) + " unitary " + mark(v.unitary) + ")");
  r.data = {{"name", args[0]}, {"symplectic", v.symplectic()}, {"dagger", v.dagger}, {"gram", v.gram}, {"unitary", v.unitary}};
  if (!v.symplectic()) r.exit_code = kExitFalse;
}

Handler transform(const std::string& label, BlockIso (*op)(const BlockIso&)) {
  return [label, op](const Session& s, const std::vector<std::string>& args, const CommandOptions&, Report& r) {
    expect_args(args, 1, label + " <blockiso> --session <file>");
    BlockIso f = op(s.block_iso(args[0]));
    r.lines.push_back(label + " of " + args[0]);
    block_lines(r, f);
    r.data = block_data(f);
    r.data["operation"] = label;
  };
}

void cmd_lagrangian(const Session& s, const std::vector<std::string>& args, const CommandOptions&, Report& r) {
  expect_args(args, 2, "lagrangian <torus> <basisfile> --session <file>");
  SymplecticPair p = build_pair(s.torus(args[0]));
  IntMatrix basis = load_basis(args[1]).transpose();
  r.data["pair"] = p.base().name();
  r.data["basis"] = matrix_data(basis);
  if (basis.rows() != p.rank()) {
    throw UsageError("basis vectors must have length " + std::to_string(p.rank()) + " for " + p.base().name());
  }
  if (!is_j_stable(p, basis)) {
    r.lines.push_back("lagrangian: false (not J_X-stable, so not an abelian subvariety)");
    r.data["j_stable"] = false;
    r.data["lagrangian"] = false;
    r.exit_code = kExitFalse;
    return;
  }
  LagrangianCheck c = is_lagrangian(p, basis);
  r.lines.push_back(std::string("lagrangian: ") + (c.lagrangian() ? "true" : "false") + " (isotropic " +
                    mark(c.isotropic) + " half rank " + mark(c.half_rank) + " saturated " + mark(c.saturated) +
                    " unimodular pairing " + mark(c.unimodular_pairing) + ")");
  r.data["j_stable"] = true;
  r.data["isotropic"] = c.isotropic;
  r.data["half_rank"] = c.half_rank;
  r.data["saturated"] = c.saturated;
  r.data["unimodular_pairing"] = c.unimodular_pairing;
  r.data["lagrangian"] = c.lagrangian();
  if (!c.lagrangian()) r.exit_code = kExitFalse;
}

void cmd_generators(const Session& s, const std::vector<std::string>& args, const CommandOptions& o, Report& r) {
  if (args.empty() || args.size() > 2) throw UsageError("usage: tsv generators <A> [<bound>] --session <file>");
  const long bound = args.size() == 2 ? parse_long(args[1], "bound") : o.bound.value_or(2);
  if (bound < 0) throw UsageError("bound must be non-negative");
  auto gens = sp_generators(s.torus(args[0]), bound);
  r.lines.push_back("generators: " + std::to_string(gens.size()) + " (bound " + std::to_string(bound) + ")");
  r.data = {{"torus", args[0]}, {"bound", bound}, {"count", gens.size()}, {"generators", ojson::array()}};
  for (std::size_t i = 0; i < gens.size(); ++i) {
    r.lines.push_back("  g" + std::to_string(i) + " rho=" + format_matrix(gens[i].rho()));
    r.data["generators"].push_back(matrix_data(gens[i].rho()));
  }
}

void cmd_classify(const Session& s, const std::vector<std::string>& args, const CommandOptions&, Report& r) {
  expect_args(args, 1, "classify <blockiso> --session <file>");
  Trichotomy t = classify(s.block_iso(args[0]));
  r.lines.push_back("case: " + to_string(t.which) + ", degree " + t.degree.get_str());
  r.lines.push_back("hypothesis: End^0 " + t.division_hypothesis.describe());
  r.data = {{"name", args[0]},
            {"case", to_string(t.which)},
            {"degree", t.degree.get_str()},
            {"hypothesis", t.division_hypothesis.describe()}};
}

void cmd_recipe(const Session& s, const std::vector<std::string>& args, const CommandOptions&, Report& r) {
  expect_args(args, 1, "recipe <blockiso> --session <file>");
  KernelRecipe k = kernel_recipe(s.block_iso(args[0]));
  r.lines.push_back("recipe: " + k.describe());
  if (k.pre) r.lines.push_back("pre: " + format_matrix(*k.pre));
  if (k.post) r.lines.push_back("post: " + format_matrix(*k.post));
  r.lines.push_back("reconstruction: " + format_matrix(k.reconstruction));
  r.data = {{"name", args[0]},
            {"recipe", to_string(k.tag)},
            {"case", to_string(k.classification.which)},
            {"degree", k.classification.degree.get_str()},
            {"blocks", ojson::array()},
            {"reconstruction", matrix_data(k.reconstruction)},
            {"verified", k.verified}};
  for (const auto& b : k.blocks) r.data["blocks"].push_back(matrix_data(b));
}

void cmd_verify_batch(const Session& s, const std::vector<std::string>& args, const CommandOptions& o, Report& r) {
  expect_args(args, 3, "verify-batch <A> <B> <wordlen> --session <file> [--bound N]");
  const long length = parse_long(args[2], "word length");
  if (length < 0) throw UsageError("word length must be non-negative");
  const long bound = o.bound.value_or(2);
  BatchReport b = verify_batch(s.torus(args[0]), s.torus(args[1]), static_cast<std::size_t>(length), bound);
  r.lines.push_back("verify-batch: " + b.source + " -> " + b.target + ", word length " + std::to_string(length) +
                    ", bound " + std::to_string(bound) + ", " + std::to_string(b.total) + " elements");
  if (!b.note.empty()) r.lines.push_back("note: " + b.note);
  for (const auto& [outcome, n] : b.counts) r.lines.push_back("  " + outcome + ": " + std::to_string(n));
  r.data = {{"source", b.source}, {"target", b.target}, {"word_length", length}, {"bound", bound},
            {"total", b.total},   {"note", b.note},     {"counts", b.counts},     {"entries", ojson::array()}};
  for (const auto& e : b.entries) {
    if (e.outcome == "TheoremViolation") r.lines.push_back("violation #" + std::to_string(e.index) + ": " + e.detail);
    r.data["entries"].push_back({{"index", e.index}, {"outcome", e.outcome}, {"detail", e.detail}});
  }
  if (b.violations() > 0) {
    r.exit_code = kExitViolation;
  } else if (b.total == 0) {
    r.exit_code = kExitFalse;
  }
}

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table = {
      {"check", cmd_check},
      {"dual", cmd_dual},
      {"hom", cmd_hom},
      {"end", cmd_end},
      {"endalg", cmd_endalg},
      {"isogeny", cmd_isogeny},
      {"pair", cmd_pair},
      {"sp-verify", cmd_sp_verify},
      {"dagger", transform("dagger", &dagger)},
      {"ddagger", transform("ddagger", &ddagger)},
      {"swap", transform("swap", &swap)},
      {"lagrangian", cmd_lagrangian},
      {"generators", cmd_generators},
      {"classify", cmd_classify},
      {"recipe", cmd_recipe},
      {"verify-batch", cmd_verify_batch},
  };
  return table;
}

}  // namespace

std::string Report::render(bool as_json) const {
  if (as_json) {
    ojson doc = data;
    doc["exit_code"] = exit_code;
    return doc.dump(2) + "\n";
  }
  std::string out;
  for (const auto& line : lines) out += line + "\n";
  return out;
}

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, h] : handlers()) out.push_back(name);
    return out;
  }();
  return names;
}

Report run(const Session& session, const std::string& command, const std::vector<std::string>& args,
           const CommandOptions& options) {
  Report r;
  auto fail = [&](int code, const std::string& kind, const std::string& what) {
    r.exit_code = code;
    r.lines.push_back(kind + ": " + what);
    r.data["error"] = kind;
    r.data["message"] = what;
  };
  auto it = handlers().find(command);
  if (it == handlers().end()) {
    fail(kExitUsage, "usage error", "unknown command \"" + command + "\"");
    return r;
  }
  try {
    it->second(session, args, options, r);
  } catch (const UsageError& e) {
    r = Report{};
    fail(kExitUsage, "usage error", e.what());
  } catch (const ParseError& e) {
    r = Report{};
    fail(kExitUsage, "parse error", e.what());
  } catch (const DimensionError& e) {
    r = Report{};
    fail(kExitUsage, "dimension error", e.what());
  } catch (const NotApplicable& e) {
    r = Report{};
    fail(kExitFalse, "not applicable", e.what());
  } catch (const NotAnIsogeny& e) {
    r = Report{};
    fail(kExitFalse, "not an isogeny", e.what());
  } catch (const InvariantError& e) {
    r = Report{};
    fail(kExitFalse, "invariant", e.what());
  } catch (const TheoremViolation& e) {
    r = Report{};
    fail(kExitViolation, "TheoremViolation", e.what());
  } catch (const OracleDisagreement& e) {
    r = Report{};
    fail(kExitViolation, "OracleDisagreement", e.what());
  }
  return r;
}

}  // namespace tsv
