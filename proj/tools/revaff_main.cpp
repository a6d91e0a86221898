// revaff: exact Jordan forms, reversibility classification and verified
// reverser/involution witnesses over Q, Q(i) and rational quaternions.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "revaff/io.hpp"

namespace {

using revaff::AffineMap;
using revaff::Error;
using revaff::ErrorClass;
using revaff::Flag;
using revaff::Matrix;
using revaff::Ring;
using revaff::Spectrum;
using namespace revaff::io;

struct CommonOpts {
  std::string input = "-";
  std::string ring;
  std::string hint_path;
  bool pretty = false;
  bool json_out = true;
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_hint = false) {
  cmd->add_option("--input", opts.input, "input file path, or - for stdin")->capture_default_str();
  cmd->add_option("--ring", opts.ring, "ring override: R, C or H (promotion only)");
  if (with_hint) cmd->add_option("--spectrum-hint", opts.hint_path, "JSON file with verified eigenvalue hints");
  cmd->add_flag("--pretty", opts.pretty, "pretty-print the JSON output");
  cmd->add_flag("--json", opts.json_out, "emit JSON (default)");
}

json read_json(const std::string& path) {
  std::string text;
  if (path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  } else {
    std::ifstream f(path);
    if (!f) revaff::throw_input("SchemaError", "cannot open input file " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    text = ss.str();
  }
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) revaff::throw_input("ParseError", "input is not valid JSON");
  return j;
}

std::optional<Ring> ring_override(const CommonOpts& opts) {
  if (opts.ring.empty()) return std::nullopt;
  return parse_ring(opts.ring);
}

std::optional<Spectrum> hint(const CommonOpts& opts) {
  if (opts.hint_path.empty()) return std::nullopt;
  return spectrum_from_json(read_json(opts.hint_path));
}

void print(const json& j, const CommonOpts& opts) {
  if (opts.pretty)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << j.dump() << "\n";
}

bool looks_affine(const json& j) { return j.is_object() && j.contains("linear"); }

// every witness-producing command re-checks its output through the oracle and
// aborts with exit 3 when the self-check fails
void self_check(bool ok) {
  if (!ok) revaff::throw_internal("witness failed the oracle self-check before printing");
}

int run_jordan(const CommonOpts& opts) {
  MatrixVar m = matrix_from_json(read_json(opts.input), ring_override(opts));
  auto h = hint(opts);
  json out = std::visit([&](const auto& a) { return jordan_json(revaff::jordan_form(a, h)); }, m);
  print(out, opts);
  return 0;
}

int run_classify_gl(const CommonOpts& opts, const std::string& mode) {
  MatrixVar m = matrix_from_json(read_json(opts.input), ring_override(opts));
  json out = std::visit(
      [&](const auto& a) {
        auto form = revaff::jordan_form(a);
        auto rep = mode == "lie" ? revaff::classify_ad_real(a, form) : revaff::classify_reversible(a, form);
        if (rep.witness) {
          if (mode == "lie")
            self_check(revaff::verify_ad_reverser(a, rep.witness->element).holds);
          else
            self_check(revaff::verify_reverser(a, rep.witness->element).holds);
        }
        return report_json(rep);
      },
      m);
  print(out, opts);
  return 0;
}

int run_classify_aff(const CommonOpts& opts) {
  AffineVar g = affine_from_json(read_json(opts.input), ring_override(opts));
  json out = std::visit(
      [&](const auto& a) {
        auto rep = revaff::aff_classify(a);
        if (rep.witness) self_check(revaff::verify_reverser(a, rep.witness->element).holds);
        return report_json(rep);
      },
      g);
  print(out, opts);
  return 0;
}

int run_reverser(const CommonOpts& opts, const std::string& mode) {
  json j = read_json(opts.input);
  json out;
  if (looks_affine(j)) {
    AffineVar g = affine_from_json(j, ring_override(opts));
    out = std::visit(
        [&](const auto& a) {
          auto w = revaff::aff_reverser(a);
          self_check(revaff::verify_reverser(a, w.element).holds);
          return witness_json(w);
        },
        g);
  } else {
    MatrixVar m = matrix_from_json(j, ring_override(opts));
    out = std::visit(
        [&](const auto& a) {
          auto form = revaff::jordan_form(a);
          auto w = mode == "lie" ? revaff::ad_reverser(a, form) : revaff::reverser(a, form);
          self_check(mode == "lie" ? revaff::verify_ad_reverser(a, w.element).holds
                                   : revaff::verify_reverser(a, w.element).holds);
          return witness_json(w);
        },
        m);
  }
  print(out, opts);
  return 0;
}

int run_involutions(const CommonOpts& opts) {
  json j = read_json(opts.input);
  json out;
  if (looks_affine(j)) {
    AffineVar g = affine_from_json(j, ring_override(opts));
    out = std::visit(
        [&](const auto& a) {
          auto [g1, g2] = revaff::aff_two_involutions(a);
          self_check(revaff::verify_involution(g1.element).holds && revaff::verify_involution(g2.element).holds &&
                     revaff::compose(g1.element, g2.element) == a);
          return json{{"g1", witness_json(g1)}, {"g2", witness_json(g2)}};
        },
        g);
  } else {
    MatrixVar m = matrix_from_json(j, ring_override(opts));
    out = std::visit(
        [&](const auto& a) {
          auto form = revaff::jordan_form(a);
          auto [g1, g2] = revaff::two_involutions(a, form);
          self_check(revaff::verify_involution(g1.element).holds && revaff::verify_involution(g2.element).holds &&
                     g1.element * g2.element == a);
          return json{{"g1", witness_json(g1)}, {"g2", witness_json(g2)}};
        },
        m);
  }
  print(out, opts);
  return 0;
}

int run_four_involutions(const CommonOpts& opts) {
  AffineVar g = affine_from_json(read_json(opts.input), ring_override(opts));
  json out = std::visit(
      [&](const auto& a) {
        auto fs = revaff::four_involutions(a);
        using T = typename std::decay_t<decltype(a)>::value_type;
        AffineMap<T> prod = compose(compose(fs[0], fs[1]), compose(fs[2], fs[3]));
        bool ok = prod == a;
        for (const auto& f : fs) ok = ok && revaff::verify_involution(f).holds;
        self_check(ok);
        json factors = json::array();
        for (const auto& f : fs) factors.push_back(affine_json(f));
        return json{{"factors", std::move(factors)}};
      },
      g);
  print(out, opts);
  return 0;
}

int run_embed(const CommonOpts& opts, const std::string& which) {
  json j = read_json(opts.input);
  json out;
  if (which == "theta") {
    AffineVar g = affine_from_json(j, ring_override(opts));
    out = std::visit([&](const auto& a) { return matrix_json(revaff::theta_embed(a)); }, g);
  } else {
    MatrixVar m = matrix_from_json(j, ring_override(opts));
    if (which == "phi") {
      auto* q = std::get_if<Matrix<revaff::Quaternion>>(&m);
      if (!q) revaff::throw_input("RingMismatch", "embed phi expects a matrix over H");
      out = matrix_json(revaff::phi_embed(*q));
    } else if (which == "psi") {
      auto* c = std::get_if<Matrix<revaff::GaussianRational>>(&m);
      if (!c) revaff::throw_input("RingMismatch", "embed psi expects a matrix over C");
      out = matrix_json(revaff::psi_embed(*c));
    } else {
      revaff::throw_input("SchemaError", "embed kind must be phi, psi or theta");
    }
  }
  print(out, opts);
  return 0;
}

template <typename GetExpectedGot>
json verdict_json(bool holds, GetExpectedGot&& fill) {
  json j{{"holds", holds}};
  if (holds) {
    j["counterexample"] = nullptr;
  } else {
    json c;
    fill(c);
    j["counterexample"] = std::move(c);
  }
  return j;
}

int run_verify(const CommonOpts& opts, const std::string& kind) {
  json j = read_json(opts.input);
  json out;
  if (kind == "reverser") {
    if (!j.is_object() || !j.contains("g") || !j.contains("r"))
      revaff::throw_input("SchemaError", "verify reverser expects {\"g\":..., \"r\":...}");
    if (looks_affine(j.at("g"))) {
      AffineVar gv = affine_from_json(j.at("g"), ring_override(opts));
      AffineVar rv = affine_from_json(j.at("r"), ring_override(opts));
      out = std::visit(
          [&](const auto& g) {
            using A = std::decay_t<decltype(g)>;
            const A& r = std::get<A>(rv);
            auto v = revaff::verify_reverser(g, r);
            return verdict_json(v.holds, [&](json& c) {
              c["detail"] = v.counterexample;
              c["expected"] = affine_json(inverse(g));
              c["got"] = affine_json(conjugate(r, g));
            });
          },
          gv);
    } else {
      MatrixVar gv = matrix_from_json(j.at("g"), ring_override(opts));
      MatrixVar rv = matrix_from_json(j.at("r"), ring_override(opts));
      out = std::visit(
          [&](const auto& g) {
            using M = std::decay_t<decltype(g)>;
            const M& r = std::get<M>(rv);
            auto v = revaff::verify_reverser(g, r);
            return verdict_json(v.holds, [&](json& c) {
              c["detail"] = v.counterexample;
              c["expected"] = matrix_json(inverse(g));
              if (revaff::is_invertible(r)) c["got"] = matrix_json(r * g * inverse(r));
            });
          },
          gv);
    }
  } else if (kind == "involution") {
    const json& src = j.is_object() && j.contains("r") ? j.at("r") : j;
    if (looks_affine(src)) {
      AffineVar rv = affine_from_json(src, ring_override(opts));
      out = std::visit(
          [&](const auto& r) {
            auto v = revaff::verify_involution(r);
            return verdict_json(v.holds, [&](json& c) {
              c["detail"] = v.counterexample;
              c["got"] = affine_json(compose(r, r));
            });
          },
          rv);
    } else {
      MatrixVar rv = matrix_from_json(src, ring_override(opts));
      out = std::visit(
          [&](const auto& r) {
            auto v = revaff::verify_involution(r);
            return verdict_json(v.holds, [&](json& c) {
              c["detail"] = v.counterexample;
              c["got"] = matrix_json(r * r);
            });
          },
          rv);
    }
  } else {
    revaff::throw_input("SchemaError", "verify kind must be reverser or involution");
  }
  print(out, opts);
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact reversibility toolkit for GL(n,D) and Aff(n,D), D in {Q, Q(i), quaternions}"};
  app.require_subcommand(1);

  CommonOpts o_jordan, o_gl, o_aff, o_rev, o_inv, o_four, o_embed, o_verify;
  std::string gl_mode = "group", rev_mode = "group", embed_kind, verify_kind;

  auto* c_jordan = app.add_subcommand("jordan", "Jordan form with similarity certificate");
  add_common(c_jordan, o_jordan, true);

  auto* c_gl = app.add_subcommand("classify-gl", "reversibility / Ad-reality classification in GL(n,D)");
  add_common(c_gl, o_gl);
  c_gl->add_option("--mode", gl_mode, "group (reversibility) or lie (Ad-reality)")->capture_default_str();

  auto* c_aff = app.add_subcommand("classify-aff", "reversibility classification in Aff(n,D)");
  add_common(c_aff, o_aff);

  auto* c_rev = app.add_subcommand("reverser", "synthesize a verified reverser witness");
  add_common(c_rev, o_rev);
  c_rev->add_option("--mode", rev_mode, "group or lie (matrix input only)")->capture_default_str();

  auto* c_inv = app.add_subcommand("involutions", "two-involution factorization of a strongly reversible element");
  add_common(c_inv, o_inv);

  auto* c_four = app.add_subcommand("four-involutions", "factor an affine map with det +-1 into four involutions");
  add_common(c_four, o_four);

  auto* c_embed = app.add_subcommand("embed", "apply phi (H->C), psi (C->R) or theta (Aff->GL)");
  c_embed->add_option("kind", embed_kind, "phi, psi or theta")->required();
  add_common(c_embed, o_embed);

  auto* c_verify = app.add_subcommand("verify", "oracle checks: reverser or involution");
  c_verify->add_option("kind", verify_kind, "reverser or involution")->required();
  add_common(c_verify, o_verify);

  CLI11_PARSE(app, argc, argv);

  try {
    if (c_jordan->parsed()) return run_jordan(o_jordan);
    if (c_gl->parsed()) return run_classify_gl(o_gl, gl_mode);
    if (c_aff->parsed()) return run_classify_aff(o_aff);
    if (c_rev->parsed()) return run_reverser(o_rev, rev_mode);
    if (c_inv->parsed()) return run_involutions(o_inv);
    if (c_four->parsed()) return run_four_involutions(o_four);
    if (c_embed->parsed()) return run_embed(o_embed, embed_kind);
    if (c_verify->parsed()) return run_verify(o_verify, verify_kind);
  } catch (const Error& e) {
    std::cout << error_json(e).dump() << "\n";
    switch (e.error_class()) {
      case ErrorClass::Domain: return 1;
      case ErrorClass::Input: return 2;
      default: return 3;
    }
  } catch (const std::exception& e) {
    std::cout << json{{"error", json{{"kind", "Internal"}, {"detail", e.what()}}}}.dump() << "\n";
    return 3;
  }
  return 2;
}
