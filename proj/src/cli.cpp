#include "wittzeta/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "wittzeta/endo.hpp"
#include "wittzeta/format.hpp"

namespace wittzeta {

namespace {

// command-line misuse that CLI11 cannot catch itself; maps to exit code 2
struct UsageError : Error {
  using Error::Error;
};

Int int_arg(const std::string& s, const std::string& what) {
  size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
  if (i == s.size() ||
      !std::all_of(s.begin() + i, s.end(),
                   [](unsigned char c) { return std::isdigit(c); }))
    throw UsageError(what + " must be an integer, got \"" + s + "\"");
  return Int(s);
}

std::vector<Int> int_list_arg(const std::string& s, const std::string& what) {
  std::vector<Int> out;
  size_t start = 0;
  while (true) {
    size_t comma = s.find(',', start);
    out.push_back(int_arg(s.substr(start, comma - start), what));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

VarietySpec load_variety(const std::string& path) {
  std::ifstream probe(path);
  if (!probe) throw UsageError("cannot open variety file: " + path);
  return parse_variety_file(path);
}

std::string joined_counts(const CountSequence& c, char sep) {
  std::string s;
  for (size_t i = 0; i < c.counts.size(); ++i) {
    if (i) s += sep;
    s += c.counts[i].get_str();
  }
  return s;
}

void print_element(std::ostream& out, const WittElement<Int>& w,
                   bool record) {
  if (record)
    out << record_series(w.series()) << "\n";
  else
    out << "series: " << format_series(w.series()) << "\n";
}

}  // namespace

int verdict_exit_code(const VerificationReport& r) {
  return r.verified ? 0 : 1;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"zeta functions over finite fields as truncated Witt vectors",
               "wittzeta"};
  app.require_subcommand(1);

  int prec = 8;
  std::uint64_t budget = kDefaultBudget;
  int dmax = 6;
  bool record = false;
  std::string file_a, file_b, lit_a, lit_b, matrix_text, poly_text;
  std::string betti_text, euler_text, at_text;
  int op_m = 1, bc_m = 1, fib_n = 1;

  auto add_prec = [&](CLI::App* sub) {
    sub->add_option("--prec", prec, "series precision: work modulo t^(N+1)")
        ->check(CLI::Range(1, 64))
        ->capture_default_str();
  };
  auto add_budget = [&](CLI::App* sub) {
    sub->add_option("--budget", budget,
                    "largest number of affine tuples one count may visit")
        ->capture_default_str();
  };
  auto add_record = [&](CLI::App* sub) {
    sub->add_flag("--record", record, "one-line machine-readable output");
  };

  CLI::App* c_zeta = app.add_subcommand(
      "zeta", "point counts, zeta series and its rational form");
  c_zeta->add_option("file", file_a, "variety description (.var)")
      ->required();
  add_prec(c_zeta);
  add_budget(c_zeta);
  add_record(c_zeta);
  c_zeta
      ->add_option("--dmax", dmax,
                   "largest denominator degree tried for the rational form")
      ->check(CLI::Range(0, 30))
      ->capture_default_str();

  CLI::App* c_count =
      app.add_subcommand("count", "points over F_q, F_q^2, ..., F_q^prec");
  c_count->add_option("file", file_a, "variety description (.var)")
      ->required();
  add_prec(c_count);
  add_budget(c_count);
  add_record(c_count);

  CLI::App* c_witt =
      app.add_subcommand("witt", "ring operations on series literals");
  c_witt->require_subcommand(1);
  CLI::App* c_add = c_witt->add_subcommand("add", "Witt sum (series product)");
  CLI::App* c_mul = c_witt->add_subcommand("mul", "Witt product");
  for (CLI::App* sub : {c_add, c_mul}) {
    sub->add_option("a", lit_a, "left series literal")->required();
    sub->add_option("b", lit_b, "right series literal")->required();
    add_prec(sub);
    add_record(sub);
  }
  CLI::App* c_frob =
      c_witt->add_subcommand("frob", "Frobenius F_m (ghost reindexing)");
  CLI::App* c_ver =
      c_witt->add_subcommand("ver", "Verschiebung V_m (t -> t^m)");
  for (CLI::App* sub : {c_frob, c_ver}) {
    sub->add_option("m", op_m, "operator index")
        ->required()
        ->check(CLI::PositiveNumber);
    sub->add_option("a", lit_a, "series literal")->required();
    add_prec(sub);
    add_record(sub);
  }

  CLI::App* c_endo =
      app.add_subcommand("endo", "endomorphisms as Witt vectors");
  c_endo->require_subcommand(1);
  CLI::App* c_charpoly = c_endo->add_subcommand(
      "charpoly", "det(1 - tM)^{-1} of an integer matrix");
  c_charpoly
      ->add_option("matrix", matrix_text,
                   "rows separated by ';', entries by ',' (\"0,1;1,1\")")
      ->required();
  add_prec(c_charpoly);
  add_record(c_charpoly);

  CLI::App* c_kapranov = app.add_subcommand(
      "kapranov", "zeta of a point-count polynomial in L");
  c_kapranov
      ->add_option("poly", poly_text, "polynomial in L (\"1 + L\")")
      ->required();
  add_prec(c_kapranov);
  add_record(c_kapranov);
  c_kapranov->add_option("--at", at_text,
                         "also specialize L to this integer");

  CLI::App* c_verify = app.add_subcommand(
      "verify", "machine-check one of the product/structure laws");
  c_verify->require_subcommand(1);
  CLI::App* v_product = c_verify->add_subcommand(
      "product", "zeta(X x Y) = zeta(X) *_W zeta(Y)");
  v_product->add_option("x", file_a, "first variety (.var)")->required();
  v_product->add_option("y", file_b, "second variety (.var)")->required();
  CLI::App* v_basechange = c_verify->add_subcommand(
      "basechange", "zeta over F_{q^m} = F_m of zeta");
  v_basechange->add_option("x", file_a, "variety (.var)")->required();
  v_basechange->add_option("--m", bc_m, "extension degree")
      ->required()
      ->check(CLI::PositiveNumber);
  CLI::App* v_fibration = c_verify->add_subcommand(
      "fibration", "zeta(X x A^n)(t) = zeta(X)(q^n t)");
  v_fibration->add_option("x", file_a, "variety (.var)")->required();
  v_fibration->add_option("--n", fib_n, "fiber dimension")
      ->required()
      ->check(CLI::PositiveNumber);
  CLI::App* v_macdonald = c_verify->add_subcommand(
      "macdonald", "symmetric-power series from Betti numbers, three routes");
  v_macdonald
      ->add_option("--betti", betti_text, "Betti numbers b_0,b_1,... (\"1,2,1\")")
      ->required();
  CLI::App* v_gottsche = c_verify->add_subcommand(
      "gottsche", "Hilbert-scheme Euler series, two routes");
  v_gottsche->add_option("--euler", euler_text, "Euler characteristic")
      ->required();
  CLI::App* v_yoshioka = c_verify->add_subcommand(
      "yoshioka", "higher-rank series: product form vs Witt form");
  v_yoshioka->add_option("y", file_a, "base variety (.var)")->required();
  for (CLI::App* sub : {v_product, v_basechange, v_fibration, v_macdonald,
                        v_gottsche, v_yoshioka}) {
    add_prec(sub);
    add_record(sub);
  }
  for (CLI::App* sub : {v_product, v_basechange, v_fibration, v_yoshioka})
    add_budget(sub);

  {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
      app.parse(rev);
    } catch (const CLI::ParseError& e) {
      int code = app.exit(e, out, err);
      return code == 0 ? 0 : 2;
    }
  }

  try {
    if (c_zeta->parsed()) {
      VarietySpec v = load_variety(file_a);
      CountSequence counts = count_sequence(v, prec, budget);
      ZetaElement z = zeta_from_counts(counts);
      if (record) {
        print_element(out, z.witt, true);
        return 0;
      }
      out << "field: F_" << z.field.q() << "\n";
      out << "counts: " << joined_counts(counts, ' ') << "\n";
      print_element(out, z.witt, false);
      int d = std::min(dmax, (prec - 1) / 2);
      try {
        RationalForm f = rational_reconstruct(z.witt.series(), d);
        out << "rational: " << format_rational_form(f) << "\n";
      } catch (const NoRationalFormError&) {
        out << "rational: none with denominator degree <= " << d << "\n";
      }
      return 0;
    }

    if (c_count->parsed()) {
      VarietySpec v = load_variety(file_a);
      CountSequence counts = count_sequence(v, prec, budget);
      if (record) {
        out << "q=" << counts.field.q() << " counts="
            << joined_counts(counts, ',') << "\n";
      } else {
        out << "field: F_" << counts.field.q() << "\n";
        out << "counts: " << joined_counts(counts, ' ') << "\n";
      }
      return 0;
    }

    if (c_add->parsed() || c_mul->parsed()) {
      WittElement<Int> a = parse_series_literal(lit_a, prec);
      WittElement<Int> b = parse_series_literal(lit_b, prec);
      print_element(out, c_add->parsed() ? witt_add(a, b) : witt_mul(a, b),
                    record);
      return 0;
    }

    if (c_frob->parsed() || c_ver->parsed()) {
      WittElement<Int> a = parse_series_literal(lit_a, prec);
      print_element(out,
                    c_frob->parsed() ? frobenius(op_m, a)
                                     : verschiebung(op_m, a),
                    record);
      return 0;
    }

    if (c_charpoly->parsed()) {
      SquareMatrix<Int> m = parse_matrix_literal(matrix_text);
      if (!record)
        out << "charpoly: " << format_poly(reversed_charpoly(m)) << "\n";
      print_element(out, charpoly_witt(m, prec), record);
      return 0;
    }

    if (c_kapranov->parsed()) {
      if (record && at_text.empty())
        throw UsageError("--record output needs --at to land in W(Z)");
      Poly<Int, 'L'> h = parse_poly_L(poly_text);
      WittElement<Poly<Int, 'L'>> z = mixed_tate_zeta(h, prec);
      if (!record) out << "series: " << format_series(z.series()) << "\n";
      if (!at_text.empty()) {
        Int q = int_arg(at_text, "--at");
        WittElement<Int> s = specialize_L(z, q);
        if (record)
          print_element(out, s, true);
        else
          out << "at L=" << q.get_str() << ": " << format_series(s.series())
              << "\n";
      }
      return 0;
    }

    VerificationReport rep;
    if (v_product->parsed())
      rep = verify_product_theorem(load_variety(file_a),
                                   load_variety(file_b), prec, budget);
    else if (v_basechange->parsed())
      rep = verify_base_change(load_variety(file_a), bc_m, prec, budget);
    else if (v_fibration->parsed())
      rep = verify_affine_fibration(load_variety(file_a), fib_n, prec,
                                    budget);
    else if (v_macdonald->parsed())
      rep = verify_macdonald(int_list_arg(betti_text, "--betti"), prec);
    else if (v_gottsche->parsed())
      rep = verify_goettsche(int_arg(euler_text, "--euler"), prec);
    else if (v_yoshioka->parsed())
      rep = verify_yoshioka(load_variety(file_a), prec, budget);
    else
      return 2;  // unreachable: require_subcommand guards this

    out << (record ? rep.to_record() : rep.to_text()) << "\n";
    return verdict_exit_code(rep);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace wittzeta
