#include "subschur/commands.hpp"

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "subschur/schur.hpp"
#include "subschur/stieltjes.hpp"

namespace subschur::cli {

using io::Json;

namespace {

Json optional_matrix(const std::optional<Matrix>& m) {
  return m ? io::matrix_to_json(*m) : Json(nullptr);
}

Json optional_sequence(const std::optional<MomentSequence>& s) {
  return s ? io::sequence_to_json(*s) : Json(nullptr);
}

Json matrix_list(const std::vector<Matrix>& ms) {
  Json out = Json::array();
  for (const auto& m : ms) out.push_back(io::matrix_to_json(m));
  return out;
}

Json header(const char* command, const Tolerance& tol, std::optional<double> alpha) {
  Json j = Json::object();
  j["command"] = command;
  j["path"] = alpha ? "stieltjes" : "hamburger";
  j["alpha"] = alpha ? Json(*alpha) : Json(nullptr);
  j["tolerance"] = tol.eps_rel();
  return j;
}

const char* bound_name(IntervalBound bound) {
  return bound == IntervalBound::Given ? "given" : "canonical";
}

}  // namespace

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse: return kParse;
    case ErrorCode::NotPSD: return kNotPSD;
    case ErrorCode::DimensionMismatch: return kDimensionMismatch;
    case ErrorCode::OddOrderUnsupported: return kOddOrderUnsupported;
    case ErrorCode::NotHermitian: return kNotHermitian;
    case ErrorCode::ShapeMismatch: return kShapeMismatch;
    case ErrorCode::NotHNND:
    case ErrorCode::NotKNND: return kNotNonnegativeDefinite;
    default: return kOtherError;
  }
}

Json schur_report(const Json& input, const Tolerance& tol) {
  if (!input.is_object() || !input.contains("A") || !input.contains("V")) {
    throw Error(ErrorCode::Parse, "schur input needs fields \"A\" and \"V\"");
  }
  const Matrix a = io::parse_matrix(input["A"]);
  if (a.rows() != a.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "\"A\" must be square");
  }
  const Matrix spanning = io::parse_matrix(input["V"], a.rows());
  const Subspace v = Subspace::from_columns(spanning, tol);

  const SchurResult res = schur_complement(a, v, tol);
  const Matrix via_basis = schur_complement_via_basis(a, v, tol);

  const Index rank_a = numerical_rank(a, tol);
  Matrix joined = a;
  if (v.dim() > 0) {
    joined.resize(a.rows(), a.cols() + v.dim());
    joined << a, v.basis();
  }
  const Index cap_dim = rank_a + v.dim() - numerical_rank(joined, tol);
  const Index rank_s = numerical_rank(res.schur, tol);

  Json j = Json::object();
  j["command"] = "schur";
  j["tolerance"] = tol.eps_rel();
  j["q"] = a.rows();
  Json mats = Json::object();
  mats["S"] = io::matrix_to_json(res.schur);
  mats["Psi"] = io::matrix_to_json(res.fiber);
  mats["Y"] = io::matrix_to_json(res.complement);
  j["matrices"] = std::move(mats);
  Json ranks = Json::object();
  ranks["A"] = rank_a;
  ranks["V"] = v.dim();
  ranks["S"] = rank_s;
  ranks["ran_A_cap_V"] = cap_dim;
  j["ranks"] = std::move(ranks);
  Json checks = Json::object();
  checks["S_psd"] = is_hermitian_psd(res.schur, tol);
  checks["S_leq_A"] = loewner_leq(res.schur, hermitian_part(a), tol);
  checks["ran_S_eq_ran_A_cap_V"] = rank_s == cap_dim && range_included(res.schur, a, tol) &&
                                   range_included(res.schur, v.basis(), tol);
  checks["ran_Y_cap_V_trivial"] = ranges_intersect_trivially(res.complement, v.basis(), tol);
  checks["via_basis_agrees"] =
      (res.schur - via_basis).norm() <= tol.threshold(a.norm());
  j["checks"] = std::move(checks);
  return j;
}

Json classify_report(const MomentSequence& s, std::optional<double> alpha,
                     const Tolerance& tol) {
  Json j = header("classify", tol, alpha);
  j["q"] = s.block_size();
  j["length"] = s.length();
  Json verdicts = Json::object();
  Json mats = Json::object();
  Json canonical;
  if (!alpha) {
    const HamburgerReport rep = classify_hamburger(s, tol);
    verdicts["is_hnnd"] = rep.is_hnnd;
    verdicts["is_hnnde"] = rep.is_hnnde;
    mats["theta"] = io::matrix_to_json(rep.theta);
    mats["L"] = io::matrix_to_json(rep.l);
    mats["L_prev"] = optional_matrix(rep.l_prev);
    mats["R"] = optional_matrix(rep.r);
    canonical = optional_sequence(rep.canonical);
  } else {
    const StieltjesReport rep = classify_stieltjes(s, *alpha, tol);
    verdicts["is_knnd"] = rep.is_knnd;
    verdicts["is_knnde"] = rep.is_knnde;
    mats["kappa"] = matrix_list(rep.kappa);
    mats["u"] = matrix_list(rep.u);
    mats["R"] = optional_matrix(rep.r);
    canonical = optional_sequence(rep.canonical);
  }
  j["verdicts"] = std::move(verdicts);
  j["matrices"] = std::move(mats);
  j["canonical"] = std::move(canonical);
  return j;
}

Json interval_report(const MomentSequence& s, const Matrix& last, IntervalBound bound,
                     std::optional<double> alpha, const Tolerance& tol) {
  Json j = header("interval", tol, alpha);
  j["bound"] = bound_name(bound);
  bool member = false;
  Interval iv;
  if (!alpha) {
    member = in_extension_interval(s, last, bound, tol);
    iv = extension_interval(s, bound, tol);
  } else {
    member = in_extension_interval_stieltjes(s, *alpha, last, bound, tol);
    iv = extension_interval_stieltjes(s, *alpha, bound, tol);
  }
  j["member"] = member;
  j["lower"] = io::matrix_to_json(iv.lower);
  j["upper"] = io::matrix_to_json(iv.upper);
  j["candidate"] = io::matrix_to_json(last);
  return j;
}

Json class_test_report(const MomentSequence& s, const MomentSequence& r,
                       std::optional<double> alpha, const Tolerance& tol) {
  Json j = header("class-test", tol, alpha);
  const ClassConditions c =
      alpha ? class_conditions_stieltjes(s, r, *alpha, tol) : class_conditions(s, r, tol);
  const Matrix upper = alpha ? r_upper_stieltjes(s, *alpha, s.order(), tol)
                             : r_upper(s, s.order() / 2, tol);
  j["same_class"] = c.same_class();
  Json cond = Json::object();
  cond["prefix_equal"] = c.prefix_equal;
  cond["difference_psd"] = c.difference_psd;
  cond["ranges_trivial"] = c.ranges_trivial;
  j["conditions"] = std::move(cond);
  j["canonical_agrees"] = c.canonical_agrees ? Json(*c.canonical_agrees) : Json(nullptr);
  j["R"] = io::matrix_to_json(upper);
  return j;
}

Matrix parse_last_block(const Json& j, Index q) {
  Matrix m;
  if (j.is_number()) {
    m = Matrix::Constant(1, 1, Complex(j.get<double>(), 0.0));
  } else if (j.is_object() && j.contains("matrix")) {
    m = io::parse_matrix(j["matrix"]);
  } else {
    m = io::parse_matrix(j);
  }
  if (m.rows() != q || m.cols() != q) {
    throw Error(ErrorCode::DimensionMismatch,
                "--last must be " + std::to_string(q) + "x" + std::to_string(q));
  }
  return m;
}

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Subspace Schur complements and truncated matricial moment sequences"};
  app.require_subcommand(1);

  double tol_value = Tolerance::kDefaultEps;
  std::optional<double> alpha_flag;
  std::string input_path;
  std::string other_path;
  std::string last_path;
  std::string bound_text = "canonical";

  auto add_common = [&](CLI::App* sub, bool with_alpha) {
    sub->add_option("--tol", tol_value, "relative tolerance")->capture_default_str();
    if (with_alpha) sub->add_option("--alpha", alpha_flag, "left endpoint of [alpha, oo)");
  };

  auto* schur = app.add_subcommand("schur", "Schur complement S(A, V) and its decomposition");
  schur->add_option("input", input_path, "JSON with A and V (\"-\" for stdin)")->required();
  add_common(schur, false);

  auto* classify = app.add_subcommand("classify", "classify a moment sequence");
  classify->add_option("input", input_path, "sequence file (\"-\" for stdin)")->required();
  add_common(classify, true);

  auto* interval = app.add_subcommand("interval", "test a candidate last block");
  interval->add_option("input", input_path, "sequence file (\"-\" for stdin)")->required();
  interval->add_option("--last", last_path, "JSON file with the candidate block")->required();
  interval->add_option("--bound", bound_text, "given | canonical")
      ->check(CLI::IsMember({"given", "canonical"}))
      ->capture_default_str();
  add_common(interval, true);

  auto* class_test = app.add_subcommand("class-test", "equivalence-class membership of r");
  class_test->add_option("input", input_path, "sequence file s")->required();
  class_test->add_option("other", other_path, "sequence file r")->required();
  add_common(class_test, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return kUsage;
  }

  try {
    const Tolerance tol(tol_value);
    auto load_sequence = [&](const std::string& path) {
      return io::parse_sequence_file(io::read_json(path, in));
    };
    Json report;
    if (*schur) {
      report = schur_report(io::read_json(input_path, in), tol);
    } else if (*classify) {
      const auto file = load_sequence(input_path);
      report = classify_report(file.sequence, alpha_flag ? alpha_flag : file.alpha, tol);
    } else if (*interval) {
      const auto file = load_sequence(input_path);
      const Matrix last = parse_last_block(io::read_json(last_path, in),
                                           file.sequence.block_size());
      const auto bound = bound_text == "given" ? IntervalBound::Given : IntervalBound::Canonical;
      report = interval_report(file.sequence, last, bound,
                               alpha_flag ? alpha_flag : file.alpha, tol);
    } else {
      const auto s = load_sequence(input_path);
      const auto r = load_sequence(other_path);
      report = class_test_report(s.sequence, r.sequence, alpha_flag ? alpha_flag : s.alpha, tol);
    }
    out << io::dump(report);
    return kOk;
  } catch (const Error& e) {
    err << "error (" << to_string(e.code()) << "): " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace subschur::cli
