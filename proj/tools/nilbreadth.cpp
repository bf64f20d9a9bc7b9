// Command-line front end. Exit codes: 0 success, 1 mathematical failure
// (Jacobi violation, failed suite, oracle disagreement), 2 usage error.
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "nilbreadth/harness.hpp"

using namespace nilbreadth;
using Json = nlohmann::ordered_json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << text;
}

LieAlgebra load(const std::string& path) { return validate_algebra(harness::parse_algebra(read_file(path))); }

Json vector_json(const Vector& v) {
  Json j = Json::array();
  for (const auto& s : v) j.push_back(s.to_string());
  return j;
}

Json matrix_json(const Matrix& m) {
  Json j = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) j.push_back(vector_json(m.row(r)));
  return j;
}

Json profile_json(const InvariantProfile& p) {
  return Json{{"dim", p.dim},           {"dim_center", p.dim_center}, {"dim_derived", p.dim_derived},
              {"is_pure", p.is_pure},   {"lcs_dims", p.lcs_dims},     {"nilpotent", p.nilpotent}};
}

std::vector<FieldSpec> parse_fields(const std::string& text) {
  std::vector<FieldSpec> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(FieldSpec::parse(item));
  if (out.empty()) throw UsageError("empty field list");
  return out;
}

bool is_usage(Errc c) {
  switch (c) {
    case Errc::BadParameters:
    case Errc::ParseError:
    case Errc::UnknownSuite:
    case Errc::InvalidField:
    case Errc::FieldMismatch:
    case Errc::DimensionMismatch:
    case Errc::SizeCapExceeded:
    case Errc::EnumerationBudgetExceeded: return true;
    default: return false;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Breadth and classification toolkit for nilpotent Lie algebras of breadth at most two"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Machine-readable output");

  std::string file, file2, output, label_text, field_text = "gf:3", mode_text = "class2", suite = "all";
  std::uint64_t seed = 1, replay = 0;
  std::size_t trials = 100, dim_v = 3, dim_z = 2, dim_v2 = 2, dim_z2 = 1, max_dim = 6, attempts = 4000;
  bool oracle = false, no_exhaustive = false;

  auto* validate = app.add_subcommand("validate", "Check the Jacobi identity");
  validate->add_option("file", file, "Algebra document")->required();
  auto* info = app.add_subcommand("info", "Invariant profile");
  info->add_option("file", file, "Algebra document")->required();
  auto* breadth = app.add_subcommand("breadth", "b(L) with a witness");
  breadth->add_option("file", file, "Algebra document")->required();
  breadth->add_flag("--oracle", oracle, "Cross-check with the brute-force oracle");
  auto* classify_cmd = app.add_subcommand("classify", "Canonical label and witness");
  classify_cmd->add_option("file", file, "Algebra document")->required();
  auto* catalog = app.add_subcommand("catalog", "Write a catalog algebra");
  catalog->add_option("label", label_text, "Label such as N4, Q(n=3)+A(1), L(alpha=2)")->required();
  catalog->add_option("--field", field_text, "q or gf:p");
  catalog->add_option("-o,--output", output, "Output file (default stdout)");
  auto* generate = app.add_subcommand("generate", "Random algebra");
  generate->add_option("--mode", mode_text, "class2 | scramble | sum | extension");
  generate->add_option("--seed", seed, "64-bit seed");
  generate->add_option("--field", field_text, "q or gf:p");
  generate->add_option("--dim-v", dim_v, "dim V (first summand for sum)");
  generate->add_option("--dim-z", dim_z, "dim Z (first summand for sum)");
  generate->add_option("--dim-v2", dim_v2, "dim V of the second summand");
  generate->add_option("--dim-z2", dim_z2, "dim Z of the second summand, or of the extension");
  generate->add_option("--label", label_text, "Catalog label for scramble mode");
  generate->add_option("-o,--output", output, "Output file (default stdout)");
  auto* verify = app.add_subcommand("verify", "Run theorem-verification suites");
  verify->add_option("--suite", suite, "Suite id or 'all'");
  verify->add_option("--trials", trials, "Trials per field");
  verify->add_option("--seed", seed, "64-bit seed");
  verify->add_option("--field", field_text, "Comma-separated fields, e.g. gf:3,gf:5");
  verify->add_option("--max-dim", max_dim, "Largest random dimension");
  verify->add_flag("--no-exhaustive", no_exhaustive, "Skip the exhaustive GF(3) class-2 corpus");
  verify->add_option("--replay", replay, "Re-run the single trial with this seed");
  auto* iso = app.add_subcommand("iso", "Isomorphism oracle");
  iso->add_option("file1", file, "First algebra")->required();
  iso->add_option("file2", file2, "Second algebra")->required();
  iso->add_option("--seed", seed, "Search seed");
  iso->add_option("--attempts", attempts, "Randomized attempts");
  auto* suites = app.add_subcommand("suites", "List suite ids");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*validate) {
      try {
        const LieAlgebra l = load(file);
        if (json)
          std::cout << Json{{"dim", l.dim()}, {"field", l.field().to_string()}, {"valid", true}}.dump(2) << "\n";
        else
          std::cout << "valid: dim " << l.dim() << " over " << l.field().to_string() << "\n";
        return 0;
      } catch (const JacobiViolation& v) {
        if (json)
          std::cout << Json{{"residual", vector_json(v.residual)}, {"triple", {v.i + 1, v.j + 1, v.k + 1}}, {"valid", false}}
                           .dump(2)
                    << "\n";
        else
          std::cout << "Jacobi violation on (" << v.i + 1 << "," << v.j + 1 << "," << v.k + 1
                    << "): residual " << to_string(v.residual) << "\n";
        return 1;
      }
    }
    if (*info) {
      const InvariantProfile p = invariant_profile(load(file));
      std::cout << (json ? profile_json(p).dump(2) : p.to_string()) << "\n";
      return 0;
    }
    if (*breadth) {
      const LieAlgebra l = load(file);
      const BreadthReport r = algebra_breadth(l);
      std::optional<std::size_t> o;
      if (oracle) o = harness::oracle_breadth(l);
      if (json) {
        Json j{{"breadth", r.value}, {"method", method_name(r.method)}, {"witness", vector_json(r.witness)}};
        if (o) j["oracle"] = *o;
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "b(L) = " << r.value << " (" << method_name(r.method) << "), witness " << to_string(r.witness) << "\n";
        if (o) std::cout << "oracle: " << *o << (*o == r.value ? " (agrees)" : " (DISAGREES)") << "\n";
      }
      return o && *o != r.value ? 1 : 0;
    }
    if (*classify_cmd) {
      const LieAlgebra l = load(file);
      const ClassificationReport r = classify(l);
      const bool ok = r.label.kind == CanonicalLabel::Kind::Unclassified || verify_witness(l, r);
      if (json) {
        Json j{{"label", r.label.to_string()},
               {"notes", r.notes},
               {"profile", profile_json(r.profile)},
               {"witness", matrix_json(r.witness.forward())},
               {"witness_verified", ok}};
        if (r.pencil) j["pencil"] = Json{{"a", r.pencil->a.to_string()}, {"b", r.pencil->b.to_string()},
                                         {"c", r.pencil->c.to_string()}, {"roots", r.pencil->roots_string()}};
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << r.label.to_string() << "\n" << r.profile.to_string() << "\n";
        if (r.label.kind != CanonicalLabel::Kind::Unclassified)
          std::cout << "witness (columns = new basis):\n" << r.witness.forward().to_string() << "\n";
        for (const auto& n : r.notes) std::cout << "note: " << n << "\n";
      }
      return ok ? 0 : 1;
    }
    if (*catalog) {
      const FieldSpec f = FieldSpec::parse(field_text);
      write_output(output, harness::serialize_algebra(catalog_make(CanonicalLabel::parse(label_text, f), f)));
      return 0;
    }
    if (*generate) {
      harness::GenerateParams p;
      p.field = FieldSpec::parse(field_text);
      p.dim_v = dim_v;
      p.dim_z = dim_z;
      p.dim_v2 = dim_v2;
      p.dim_z2 = dim_z2;
      if (!label_text.empty()) p.label = CanonicalLabel::parse(label_text, p.field);
      write_output(output, harness::serialize_algebra(harness::generate_random(harness::parse_mode(mode_text), p, seed)));
      return 0;
    }
    if (*verify) {
      const auto fields = parse_fields(field_text);
      if (verify->count("--replay")) {
        if (fields.size() != 1) throw UsageError("--replay needs exactly one field");
        const auto r = harness::replay_trial(suite, fields[0], replay, max_dim);
        const char* names[] = {"pass", "fail", "skipped"};
        const char* name = names[static_cast<int>(r.outcome)];
        if (json)
          std::cout << Json{{"message", r.message}, {"outcome", name}}.dump(2) << "\n";
        else
          std::cout << name << (r.message.empty() ? "" : ": " + r.message) << "\n" << r.document;
        return r.outcome == harness::TrialRecord::Outcome::Fail ? 1 : 0;
      }
      std::vector<std::string> ids;
      if (suite == "all") ids = harness::suite_ids();
      else ids.push_back(suite);
      bool all_pass = true;
      Json reports = Json::array();
      for (const auto& id : ids) {
        harness::VerifyOptions o;
        o.suite = id;
        o.trials = trials;
        o.seed = seed;
        o.fields = fields;
        o.exhaustive = !no_exhaustive;
        o.max_dim = max_dim;
        const auto report = harness::verify_theorems(o);
        all_pass = all_pass && report.passed();
        if (json) reports.push_back(Json::parse(report.to_json()));
        else std::cout << report.to_text() << "\n";
      }
      if (json) std::cout << (ids.size() == 1 ? reports[0] : reports).dump(2) << "\n";
      return all_pass ? 0 : 1;
    }
    if (*iso) {
      harness::IsoOptions o;
      o.seed = seed;
      o.attempts = attempts;
      const auto r = harness::oracle_isomorphism(load(file), load(file2), o);
      if (json) {
        Json j{{"evidence", r.evidence}, {"verdict", r.verdict_name()}};
        if (r.witness) j["witness"] = matrix_json(r.witness->forward());
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << r.verdict_name() << ": " << r.evidence << "\n";
        if (r.witness) std::cout << "witness (change_basis(file2, W) = file1):\n" << r.witness->forward().to_string() << "\n";
      }
      return 0;
    }
    if (*suites) {
      for (const auto& id : harness::suite_ids()) std::cout << id << "\n";
      return 0;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error (" << errc_name(e.code()) << "): " << e.what() << "\n";
    return is_usage(e.code()) ? 2 : 1;
  }
  return 2;
}
