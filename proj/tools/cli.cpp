#include "cli.hpp"

#include <fstream>
#include <iterator>
#include <ostream>
#include <sstream>
#include <vector>

#include <CLI11.hpp>
#include <fmt/core.h>

#include "treespec/assigned.hpp"
#include "treespec/balanced.hpp"
#include "treespec/errors.hpp"
#include "treespec/factored.hpp"
#include "treespec/merge.hpp"
#include "treespec/oracle.hpp"
#include "treespec/spectrum.hpp"
#include "treespec/tree.hpp"

namespace treespec::cli {

namespace {

/// Input file trouble; maps to kInputFormat.
struct InputError : Error {
  using Error::Error;
};

RootedTree load_tree(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  try {
    return parse_tree(text);
  } catch (const MalformedInput& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::vector<RootedTree> load_trees(const std::vector<std::string>& paths) {
  std::vector<RootedTree> out;
  out.reserve(paths.size());
  for (const auto& p : paths) out.push_back(load_tree(p));
  return out;
}

std::vector<long> parse_csv(const std::string& text) {
  std::vector<long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stol(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw CLI::ValidationError("list", "bad integer '" + item + "' in '" + text + "'");
    }
  }
  return out;
}

/// Characteristic polynomial factored as x^z times the square-free factors of
/// the remaining part, grouped by multiplicity.
FactoredPoly display_factors(const IntPoly& p) {
  FactoredPoly f;
  const std::size_t z = zero_root_multiplicity(p);
  f.append(IntPoly::x(), static_cast<unsigned>(z));
  const IntPoly rest = strip_zero_roots(p);
  if (rest.degree() > 0) {
    const auto parts = squarefree_decomposition(rest);
    for (std::size_t k = 0; k < parts.size(); ++k) f.append(parts[k], static_cast<unsigned>(k + 1));
  }
  return f;
}

std::string fmt_float(long double v, int digits) {
  if (v == 0.0L) v = 0.0L;  // no "-0"
  return fmt::format("{:.{}g}", static_cast<double>(v), digits);
}

void print_poly(std::ostream& out, const IntPoly& p) {
  out << p.to_text() << '\n';
  out << (p.degree() > 0 && p.is_monic() ? display_factors(p).pretty() : p.pretty()) << '\n';
}

void print_factored(std::ostream& out, const FactoredPoly& f) {
  out << f.pretty() << '\n' << expand(f).to_text() << '\n';
}

void print_spectrum(std::ostream& out, const SpectrumReport& r, int digits) {
  out << "# degree " << r.source_degree << ", distinct " << r.distinct() << '\n';
  for (const auto& e : r.entries) {
    out << fmt_float(e.approx, digits) << "  " << e.multiplicity << "  ["
        << fmt_float(e.lo.convert_to<long double>(), digits + 4) << ", "
        << fmt_float(e.hi.convert_to<long double>(), digits + 4) << "]\n";
  }
}

void print_certificate(std::ostream& out, const MergeCertificate& cert) {
  out << (cert.holds ? "holds" : "fails") << '\n';
  out << "divisor " << cert.claimed_divisor.to_text() << '\n';
  out << "quotient " << cert.quotient.to_text() << '\n';
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact characteristic polynomials, spectra and energies of rooted trees", "treespec"};
  app.require_subcommand(1);
  int digits = 10;
  app.add_option("--digits", digits, "Significant digits for floating output")
      ->check(CLI::Range(1, 30));

  std::string file;
  std::vector<std::string> files;
  std::string tol_text = "1e-12";
  bool laplacian = false;
  bool want_energy = false;
  bool want_sigma = false;
  bool numeric = false;
  int d = 0;
  int k = 0;
  std::string alpha_text;
  std::string beta_text;
  std::string output_path;

  auto* charpoly = app.add_subcommand("charpoly", "Adjacency characteristic polynomial P(T,x)");
  charpoly->add_option("file", file, "Tree file")->required();

  auto* lap = app.add_subcommand("lap-charpoly", "Laplacian characteristic polynomial Q(T,x)");
  lap->add_option("file", file, "Tree file")->required();

  auto* spectrum = app.add_subcommand("spectrum", "Certified eigenvalues with multiplicities");
  spectrum->add_option("file", file, "Tree file")->required();
  spectrum->add_option("--tol", tol_text, "Interval width, decimal or p/q");
  spectrum->add_flag("--laplacian", laplacian, "Use the Laplacian instead of the adjacency matrix");

  auto* energy = app.add_subcommand("energy", "Graph energy");
  energy->add_option("file", file, "Tree file")->required();

  auto* bethe = app.add_subcommand("bethe", "Bethe tree B_{d,k}");
  bethe->add_option("d", d, "Degree d >= 2")->required();
  bethe->add_option("k", k, "Levels k >= 1")->required();
  auto* energy_flag = bethe->add_flag("--energy", want_energy, "Closed-form energy");
  bethe->add_flag("--sigma", want_sigma, "Distinct eigenvalues")->excludes(energy_flag);

  auto* antifact = app.add_subcommand("antifact", "Anti-factorial tree A_k");
  antifact->add_option("k", k, "Levels k >= 1")->required();

  auto* merge = app.add_subcommand("merge", "Merge trees under a new root");
  merge->add_option("files", files, "Tree files")->required();
  merge->add_option("--alpha", alpha_text, "Comma separated copy counts")->required();
  merge->add_option("-o,--output", output_path, "Write the merged tree here instead of stdout");

  auto* verify = app.add_subcommand("verify", "Check the merge divisibility certificate");
  verify->add_option("files", files, "Tree files")->required();
  verify->add_option("--alpha", alpha_text, "Comma separated copy counts (default all 2)");
  verify->add_flag("--numeric", numeric, "Also compare eigenvalue multiplicities numerically");

  auto* oracle = app.add_subcommand("oracle-check", "Compare the recursion with a dense determinant");
  oracle->add_option("file", file, "Tree file")->required();
  oracle->add_option("--beta", beta_text, "Comma separated diagonal shift");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (charpoly->parsed()) {
      print_poly(out, charpoly_adjacency(load_tree(file)));
    } else if (lap->parsed()) {
      print_poly(out, charpoly_laplacian(load_tree(file)));
    } else if (spectrum->parsed()) {
      BigRational tol;
      try {
        tol = tol_text.find('/') != std::string::npos ? BigRational(tol_text)
                                                      : BigRational(std::stod(tol_text));
      } catch (const std::exception&) {
        err << "bad tolerance '" << tol_text << "'\n";
        return kUsage;
      }
      if (tol.sign() <= 0) {
        err << "tolerance must be positive\n";
        return kUsage;
      }
      const RootedTree t = load_tree(file);
      const IntPoly p = laplacian ? charpoly_laplacian(t) : charpoly_adjacency(t);
      print_spectrum(out, real_roots_with_multiplicity(p, tol), digits);
    } else if (energy->parsed()) {
      out << fmt_float(energy_numeric(load_tree(file)), digits) << '\n';
    } else if (bethe->parsed()) {
      if (want_energy) {
        const ClosedForm e = bethe_energy(d, k);
        out << e.str() << '\n' << fmt_float(e.value(), digits) << '\n';
      } else if (want_sigma) {
        for (const auto& r : bethe_distinct_eigenvalues(d, k))
          out << r.str() << "  " << fmt_float(r.value(), digits) << '\n';
      } else {
        print_factored(out, bethe_charpoly(d, k));
      }
    } else if (antifact->parsed()) {
      print_factored(out, antifactorial_charpoly(k));
      out << "# distinct eigenvalues are the roots of\n";
      for (const auto& p : antifactorial_distinct_eigenvalues(k)) out << p.pretty() << '\n';
    } else if (merge->parsed()) {
      const auto inputs = load_trees(files);
      const std::vector<long> raw = parse_csv(alpha_text);
      std::vector<unsigned> alphas;
      for (long a : raw) {
        if (a < 1) throw DomainError("copy counts must be positive");
        alphas.push_back(static_cast<unsigned>(a));
      }
      const MergeCertificate cert = verify_merge(inputs, alphas);
      if (output_path.empty()) {
        out << serialize(cert.merged);
      } else {
        std::ofstream f(output_path);
        if (!f) throw InputError("cannot write " + output_path);
        f << serialize(cert.merged);
      }
      print_certificate(out, cert);
      if (!cert.holds) return kVerificationFailed;
    } else if (verify->parsed()) {
      const auto inputs = load_trees(files);
      std::vector<unsigned> alphas(inputs.size(), 2);
      if (!alpha_text.empty()) {
        alphas.clear();
        for (long a : parse_csv(alpha_text)) {
          if (a < 1) throw DomainError("copy counts must be positive");
          alphas.push_back(static_cast<unsigned>(a));
        }
      }
      const MergeCertificate cert = verify_merge(inputs, alphas);
      print_certificate(out, cert);
      bool ok = cert.holds;
      if (numeric) {
        for (const auto& c : check_merge_multiplicities(inputs, alphas, cert.merged)) {
          out << "lambda " << fmt_float(c.eigenvalue, digits) << "  required " << c.required
              << "  found " << c.found << '\n';
          ok = ok && c.found >= c.required;
        }
      }
      if (!ok) return kVerificationFailed;
    } else if (oracle->parsed()) {
      const RootedTree t = load_tree(file);
      bool ok = true;
      auto compare = [&](const char* what, const IntPoly& engine, const IntPoly& dense) {
        if (engine == dense) return;
        ok = false;
        out << what << ": engine " << engine.to_text() << " | oracle " << dense.to_text() << '\n';
      };
      compare("adjacency", charpoly_adjacency(t),
              charpoly_dense(build_matrix(t, MatrixKind::adjacency)));
      compare("laplacian", charpoly_laplacian(t),
              charpoly_dense(build_matrix(t, MatrixKind::laplacian)));
      if (!beta_text.empty()) {
        const std::vector<long> beta = parse_csv(beta_text);
        if (beta.size() != t.size()) {
          err << "--beta needs " << t.size() << " entries\n";
          return kUsage;
        }
        const IntPoly engine = charpoly_general(t, beta);
        compare("beta+", engine, charpoly_dense(build_matrix(t, MatrixKind::shifted_plus, beta)));
        compare("beta-", engine, charpoly_dense(build_matrix(t, MatrixKind::shifted_minus, beta)));
      }
      if (!ok) return kVerificationFailed;
    }
  } catch (const InputError& e) {
    err << e.what() << '\n';
    return kInputFormat;
  } catch (const CLI::ValidationError& e) {
    err << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << e.what() << '\n';
    return kUsage;
  }
  return kOk;
}

}  // namespace treespec::cli
