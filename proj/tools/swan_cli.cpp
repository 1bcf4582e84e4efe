// swan: command-line front end for inert primes, cyclotomic fields and
// Swan subgroup orders.
//
// Exit codes: 0 success, 1 verification failure, 2 domain error,
// 3 method disagreement, 4 factoring budget exhausted.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "swan/bigarith.hpp"
#include "swan/cyclofield.hpp"
#include "swan/errors.hpp"
#include "swan/factor_cache.hpp"
#include "swan/primroots.hpp"
#include "swan/swan.hpp"
#include "swan/tables.hpp"
#include "swan/units.hpp"

namespace {

using json = nlohmann::ordered_json;
using swan::Natural;

enum ExitCode { kOk = 0, kVerifyFailed = 1, kDomain = 2, kDisagreement = 3, kBudget = 4 };

enum class Format { kText, kJson, kCsv };

struct Common {
  std::string format = "text";
  bool format_given = false;
  std::uint64_t seed = 0;
  std::string cache_path;
  std::optional<double> time_budget;
  std::unique_ptr<swan::FactorCache> cache;

  Format fmt() const {
    if (format == "json") return Format::kJson;
    if (format == "csv") return Format::kCsv;
    return Format::kText;
  }

  swan::FactorOptions factor_options() {
    swan::FactorOptions o;
    o.seed = seed;
    if (time_budget) o.time_budget = std::chrono::duration<double>(*time_budget);
    if (!cache_path.empty() && !cache) cache = std::make_unique<swan::FactorCache>(cache_path);
    o.cache = cache.get();
    return o;
  }
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

json factorization_json(const swan::Factorization& f) {
  json arr = json::array();
  for (const auto& [q, e] : f.pairs()) arr.push_back(json::array({q.to_string(), e}));
  return arr;
}

// ---------------------------------------------------------------- primroot

int cmd_primroot(Common& c, std::optional<std::uint64_t> m, std::optional<int> table,
                 std::uint64_t max_m) {
  if (table) {
    if (*table != 22 && *table != 24) throw swan::DomainError("--table must be 22 or 24");
    const auto mode = *table == 22 ? swan::TableMode::kTable22 : swan::TableMode::kTable24;
    const auto rows = swan::generate_table(3, max_m, mode);
    const Format f = c.format_given ? c.fmt() : Format::kCsv;
    if (f == Format::kJson) {
      json doc{{"command", "primroot-table"}, {"table", std::to_string(*table)}, {"max_m", max_m}};
      json arr = json::array();
      for (const auto& r : rows) {
        arr.push_back({{"m", r.m},
                       {"r", r.least_primitive_root},
                       {"p", r.inert_prime},
                       {"method", std::string(swan::to_string(r.method))}});
      }
      doc["rows"] = std::move(arr);
      std::cout << doc.dump(2) << '\n';
    } else if (f == Format::kCsv) {
      std::cout << "m,r,p\n";
      for (const auto& r : rows) {
        std::cout << r.m << ',' << r.least_primitive_root << ',' << r.inert_prime << '\n';
      }
    } else {
      std::cout << "Table " << *table << " (m <= " << max_m << ", " << rows.size() << " rows)\n";
      std::cout << "     m      r      p\n";
      for (const auto& r : rows) {
        std::printf("%6llu %6llu %6llu\n", static_cast<unsigned long long>(r.m),
                    static_cast<unsigned long long>(r.least_primitive_root),
                    static_cast<unsigned long long>(r.inert_prime));
      }
      std::cout.flush();
    }
    return kOk;
  }
  if (!m) throw swan::DomainError("primroot needs m or --table");

  const auto r = swan::least_primitive_root(*m);
  const auto prog = swan::progression_prime(*m, r);
  const auto direct = swan::least_inert_prime_direct(*m);
  std::optional<std::uint64_t> two_m;
  if (*m % 2 == 1 && swan::is_prime_power(*m)) two_m = swan::two_m_reduction(*m);

  switch (c.fmt()) {
    case Format::kJson: {
      json doc{{"command", "primroot"},
               {"m", *m},
               {"least_primitive_root", r},
               {"progression_prime", prog},
               {"direct_prime", direct}};
      doc["two_m_reduction"] = two_m ? json(*two_m) : json(nullptr);
      std::cout << doc.dump(2) << '\n';
      break;
    }
    case Format::kCsv:
      std::cout << "m,least_primitive_root,progression_prime,direct_prime,two_m_reduction\n"
                << *m << ',' << r << ',' << prog << ',' << direct << ','
                << (two_m ? std::to_string(*two_m) : "") << '\n';
      break;
    case Format::kText:
      std::cout << "m                     " << *m << '\n'
                << "least primitive root  r = " << r << '\n'
                << "progression prime     p = " << prog << "  (least prime = r mod m)\n"
                << "least inert prime     p = " << direct << "  (direct scan)\n";
      if (two_m) {
        std::cout << "2m reduction          r(2m) = " << *two_m
                  << (swan::is_prime(Natural(*two_m)) ? "  (prime: an inert prime)\n"
                                                      : "  (composite)\n");
      }
      break;
  }
  return kOk;
}

// ---------------------------------------------------------------- swan

void print_swan(const swan::SwanResult& r, Format f) {
  const auto opt = [](const std::optional<Natural>& n) { return n ? n->to_string() : std::string(); };
  switch (f) {
    case Format::kJson: {
      json doc{{"command", "swan"},
               {"m", r.m},
               {"p", r.p},
               {"group_order", r.group_order.to_string()},
               {"subgroup_order", r.subgroup_order.to_string()},
               {"cokernel_order", r.cokernel_order.to_string()},
               {"exactness", std::string(swan::to_string(r.exactness))},
               {"method", std::string(swan::to_string(r.method))}};
      doc["full_subgroup_order"] = r.full_subgroup_order ? json(opt(r.full_subgroup_order)) : json(nullptr);
      doc["reduced_subgroup_order"] =
          r.reduced_subgroup_order ? json(opt(r.reduced_subgroup_order)) : json(nullptr);
      doc["coprimality_gcd"] = r.coprimality_gcd.to_string();
      doc["torsion_sensitive"] = r.torsion_sensitive;
      doc["complete"] = r.complete;
      doc["unfactored_cofactor"] = r.unfactored_cofactor.to_string();
      doc["group_order_factorization"] = factorization_json(r.group_order_factorization);
      std::cout << doc.dump(2) << '\n';
      break;
    }
    case Format::kCsv:
      std::cout << "m,p,group_order,subgroup_order,cokernel_order,exactness,method,"
                   "coprimality_gcd,torsion_sensitive,complete\n"
                << r.m << ',' << r.p << ',' << r.group_order << ',' << r.subgroup_order << ','
                << r.cokernel_order << ',' << swan::to_string(r.exactness) << ','
                << swan::to_string(r.method) << ',' << r.coprimality_gcd << ','
                << (r.torsion_sensitive ? "true" : "false") << ','
                << (r.complete ? "true" : "false") << '\n';
      break;
    case Format::kText: {
      std::cout << "field              F_" << r.p << "[z]/(Phi_" << r.m << "(z))\n"
                << "group order N      " << r.group_order << '\n';
      std::cout << "  factored         " << r.group_order_factorization.to_string();
      if (!r.complete) std::cout << " * (unfactored " << r.unfactored_cofactor << ")";
      std::cout << '\n';
      std::cout << "subgroup |h(C)|    " << r.subgroup_order << (r.complete ? "" : " (lower bound)")
                << '\n';
      if (r.method == swan::Method::kBoth) {
        std::cout << "  full / reduced   " << opt(r.full_subgroup_order) << " / "
                  << opt(r.reduced_subgroup_order) << '\n';
      }
      const bool exact = r.exactness == swan::Exactness::kExact;
      std::cout << "cokernel |T|       " << (exact && r.complete ? "= " : "<= ") << r.cokernel_order
                << '\n'
                << "exactness          " << swan::to_string(r.exactness)
                << (exact ? "  (phi(mp) <= 72)\n" : "  (phi(mp) > 72: upper bound)\n")
                << "method             " << swan::to_string(r.method) << '\n'
                << "gcd(|T|, (p-1)/2)  " << r.coprimality_gcd << '\n'
                << "torsion sensitive  " << (r.torsion_sensitive ? "yes" : "no") << '\n';
      if (!r.complete) std::cout << "status             INCOMPLETE (factoring budget exhausted)\n";
      break;
    }
  }
}

int cmd_swan(Common& c, std::uint64_t m, std::uint64_t p, std::optional<std::string> method_name) {
  swan::Method method;
  if (method_name) {
    method = swan::parse_method(*method_name);
  } else {
    const bool reducible = m == 4 || (m >= 3 && m % 2 == 1 && swan::is_prime_power(m));
    method = !reducible ? swan::Method::kFull : (m <= 37 ? swan::Method::kBoth : swan::Method::kReduced);
  }
  swan::SwanOptions opts;
  opts.factor = c.factor_options();
  const auto t0 = std::chrono::steady_clock::now();
  const auto result = swan::swan_order(m, p, method, opts);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  print_swan(result, c.fmt());
  // Wall time goes to stderr so stdout stays byte-identical across runs.
  std::cerr << "wall time: " << secs << " s\n";
  return result.complete ? kOk : kBudget;
}

// ---------------------------------------------------------------- verify

int cmd_verify(Common& c, std::uint64_t max_m, const std::string& tables_path) {
  const auto tables = tables_path.empty() ? swan::ReferenceTables::embedded()
                                          : swan::ReferenceTables::from_file(tables_path);
  swan::VerifyOptions opts;
  opts.max_m = max_m;
  opts.swan.factor = c.factor_options();
  const auto report = swan::verify_reference_tables(tables, opts);

  const auto gcd_str = [](const swan::RowReport& r) {
    return r.coprimality_gcd ? r.coprimality_gcd->to_string() : std::string();
  };
  switch (c.fmt()) {
    case Format::kJson: {
      json rows = json::array();
      for (const auto& r : report.rows) {
        json row{{"table", r.table},
                 {"m", r.m},
                 {"expected", r.expected},
                 {"computed", r.computed},
                 {"status", std::string(swan::to_string(r.status))},
                 {"note", r.note}};
        row["coprimality_gcd"] = r.coprimality_gcd ? json(gcd_str(r)) : json(nullptr);
        rows.push_back(std::move(row));
      }
      json doc{{"command", "verify"},
               {"max_m", max_m},
               {"all_passed", report.all_passed()},
               {"counts",
                {{"pass", report.count(swan::RowStatus::kPass)},
                 {"fail", report.count(swan::RowStatus::kFail)},
                 {"skipped", report.count(swan::RowStatus::kSkipped)},
                 {"incomplete", report.count(swan::RowStatus::kIncomplete)}}},
               {"rows", std::move(rows)}};
      std::cout << doc.dump(2) << '\n';
      break;
    }
    case Format::kCsv:
      std::cout << "table,m,expected,computed,status,coprimality_gcd,note\n";
      for (const auto& r : report.rows) {
        std::cout << r.table << ',' << r.m << ',' << csv_field(r.expected) << ','
                  << csv_field(r.computed) << ',' << swan::to_string(r.status) << ','
                  << gcd_str(r) << ',' << csv_field(r.note) << '\n';
      }
      break;
    case Format::kText: {
      for (const auto& r : report.rows) {
        std::cout << swan::to_string(r.status) << "  table " << r.table << "  m=" << r.m
                  << "  expected " << r.expected;
        if (!r.computed.empty()) std::cout << "  computed " << r.computed;
        if (r.coprimality_gcd) std::cout << "  gcd=" << *r.coprimality_gcd;
        if (!r.note.empty()) std::cout << "  [" << r.note << ']';
        std::cout << '\n';
      }
      std::cout << "\n" << report.count(swan::RowStatus::kPass) << " passed, "
                << report.count(swan::RowStatus::kFail) << " failed, "
                << report.count(swan::RowStatus::kSkipped) << " skipped, "
                << report.count(swan::RowStatus::kIncomplete) << " incomplete\n";
      for (const auto& r : report.rows) {
        if (r.coprimality_gcd && !r.coprimality_gcd->is_one()) {
          std::cout << "NOTICE: table 4.8 row m=" << r.m << " value " << r.computed
                    << " shares factor " << *r.coprimality_gcd
                    << " with (p-1)/2; the coprimality observation does not hold for this row\n";
        }
      }
      break;
    }
  }
  return report.all_passed() ? kOk : kVerifyFailed;
}

// ---------------------------------------------------------------- factor

int cmd_factor(Common& c, const std::string& n_str) {
  const Natural n = Natural::from_string(n_str);
  swan::Factorization f;
  std::optional<Natural> cofactor;
  try {
    f = swan::factor(n, c.factor_options());
  } catch (const swan::FactorBudgetExceeded& e) {
    f = e.factored();
    cofactor = e.cofactor();
  }
  switch (c.fmt()) {
    case Format::kJson: {
      json doc{{"command", "factor"}, {"n", n.to_string()}, {"factors", factorization_json(f)}};
      doc["complete"] = !cofactor.has_value();
      doc["unfactored_cofactor"] = cofactor ? cofactor->to_string() : std::string("1");
      std::cout << doc.dump(2) << '\n';
      break;
    }
    case Format::kCsv:
      std::cout << "prime,exponent\n";
      for (const auto& [q, e] : f.pairs()) std::cout << q << ',' << e << '\n';
      break;
    case Format::kText:
      std::cout << n << " = " << f.to_string();
      if (cofactor) std::cout << " * " << *cofactor << " (unfactored)";
      std::cout << '\n';
      break;
  }
  return cofactor ? kBudget : kOk;
}

// ---------------------------------------------------------------- cyclopoly

int cmd_cyclopoly(Common& c, std::uint64_t m, std::optional<std::uint64_t> mod) {
  const auto& phi = swan::cyclotomic_poly(m);
  std::vector<std::string> coeffs;
  std::string text;
  if (mod) {
    if (*mod < 2 || *mod > swan::FieldSpec::kMaxCharacteristic || !swan::is_prime(Natural(*mod))) {
      throw swan::DomainError("--mod must be a prime below 2^24");
    }
    const auto red = phi.reduce_mod(static_cast<std::uint32_t>(*mod));
    std::vector<mpz_class> as_int(red.begin(), red.end());
    for (auto v : red) coeffs.push_back(std::to_string(v));
    text = swan::IntPoly(as_int).to_string();
  } else {
    for (const auto& v : phi.coeffs()) coeffs.push_back(v.get_str());
    text = phi.to_string();
  }
  switch (c.fmt()) {
    case Format::kJson: {
      json doc{{"command", "cyclopoly"}, {"m", m}};
      doc["modulus"] = mod ? json(*mod) : json(nullptr);
      doc["coefficients"] = coeffs;
      doc["text"] = text;
      std::cout << doc.dump(2) << '\n';
      break;
    }
    case Format::kCsv:
      std::cout << "degree,coefficient\n";
      for (std::size_t i = 0; i < coeffs.size(); ++i) std::cout << i << ',' << coeffs[i] << '\n';
      break;
    case Format::kText: {
      std::cout << '[';
      for (std::size_t i = 0; i < coeffs.size(); ++i) std::cout << (i ? ", " : "") << coeffs[i];
      std::cout << "]\n" << text << '\n';
      break;
    }
  }
  return kOk;
}

// ---------------------------------------------------------------- units

std::string kind_name(swan::UnitGen::Kind k) {
  switch (k) {
    case swan::UnitGen::Kind::kFrac:
      return "frac";
    case swan::UnitGen::Kind::kFlat:
      return "flat";
    case swan::UnitGen::Kind::kRootOfUnity:
      return "root_of_unity";
    case swan::UnitGen::Kind::kFracFamily:
      return "frac_family";
  }
  return "?";
}

int cmd_units(Common& c, std::uint64_t m, std::uint64_t p, bool reduced, bool images) {
  const auto gens = reduced ? swan::reduced_generator_set(m, p) : swan::enumerate_generators(m, p);
  std::optional<swan::FieldSpec> field;
  if (images) field = swan::FieldSpec::make(m, p, c.factor_options());

  struct Row {
    const swan::UnitGen* g;
    std::string image;
    std::vector<std::uint32_t> coeffs;
    std::string order;
  };
  std::vector<Row> rows;
  for (const auto& g : gens) {
    Row r{&g, "", {}, ""};
    if (field) {
      const auto img = swan::image_of_generator(g, *field);
      r.image = field->format(img);
      r.coeffs = img.coeffs();
      r.order = field->factorization_complete() ? field->element_order(img).to_string()
                                                : field->element_order_lower_bound(img).to_string();
    }
    rows.push_back(std::move(r));
  }

  switch (c.fmt()) {
    case Format::kJson: {
      json arr = json::array();
      for (const auto& r : rows) {
        json g{{"generator", r.g->to_string()},
               {"kind", kind_name(r.g->kind)},
               {"d", r.g->d},
               {"a", r.g->a},
               {"b", r.g->b}};
        if (field) {
          g["image"] = r.coeffs;
          g["order"] = r.order;
        }
        arr.push_back(std::move(g));
      }
      json doc{{"command", "units"}, {"m", m}, {"p", p}, {"reduced", reduced}, {"count", rows.size()}};
      doc["generators"] = std::move(arr);
      if (field) doc["subgroup_order"] = swan::subgroup_order_lower_bound(gens, *field).to_string();
      std::cout << doc.dump(2) << '\n';
      break;
    }
    case Format::kCsv:
      std::cout << "generator,kind,d,a,b,image,order\n";
      for (const auto& r : rows) {
        std::cout << csv_field(r.g->to_string()) << ',' << kind_name(r.g->kind) << ',' << r.g->d
                  << ',' << r.g->a << ',' << r.g->b << ',' << csv_field(r.image) << ',' << r.order
                  << '\n';
      }
      break;
    case Format::kText:
      std::cout << rows.size() << " generators for n = " << m * p
                << (reduced ? " (reduced set)" : "") << '\n';
      for (const auto& r : rows) {
        std::cout << "  " << r.g->to_string();
        if (field) std::cout << "  ->  " << r.image << "  order " << r.order;
        std::cout << '\n';
      }
      if (field) {
        std::cout << "subgroup order " << swan::subgroup_order_lower_bound(gens, *field) << " of N = "
                  << field->group_order() << '\n';
      }
      break;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Inert primes, cyclotomic finite fields and Swan subgroup orders"};
  app.require_subcommand(1);
  app.fallthrough();

  Common common;
  if (const char* env = std::getenv("SWAN_CACHE")) common.cache_path = env;
  app.add_option_function<std::string>(
         "--format",
         [&](const std::string& f) {
           common.format = f;
           common.format_given = true;
         },
         "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--seed", common.seed, "Seed for probabilistic primality and factoring");
  app.add_option("--cache", common.cache_path, "Factorization cache file (default $SWAN_CACHE)");
  app.add_option("--time-budget", common.time_budget, "Factoring budget in seconds")
      ->check(CLI::NonNegativeNumber);

  auto* primroot = app.add_subcommand("primroot", "Least primitive root and inert primes for m");
  std::optional<std::uint64_t> pr_m;
  std::optional<int> pr_table;
  std::uint64_t pr_max_m = 100;
  primroot->add_option("m", pr_m, "Modulus m >= 3");
  primroot->add_option("--table", pr_table, "Emit table 22 or 24");
  primroot->add_option("--max-m", pr_max_m, "Largest m for --table");

  auto* swan_cmd = app.add_subcommand("swan", "Order of the Swan subgroup T(Lambda_{m,p})");
  std::uint64_t sw_m = 0, sw_p = 0;
  std::optional<std::string> sw_method;
  swan_cmd->add_option("m", sw_m)->required();
  swan_cmd->add_option("p", sw_p)->required();
  swan_cmd->add_option("--method", sw_method, "full | reduced | both")
      ->check(CLI::IsMember({"full", "reduced", "both"}));

  auto* verify = app.add_subcommand("verify", "Recompute the embedded reference tables");
  std::uint64_t vf_max_m = 37;
  std::string vf_tables;
  verify->add_option("--max-m", vf_max_m, "Skip rows with larger m");
  verify->add_option("--tables", vf_tables, "Reference tables JSON instead of the embedded copy");

  auto* factor_cmd = app.add_subcommand("factor", "Prime factorization of n");
  std::string fc_n;
  factor_cmd->add_option("n", fc_n)->required();

  auto* cyclo = app.add_subcommand("cyclopoly", "The m-th cyclotomic polynomial");
  std::uint64_t cy_m = 0;
  std::optional<std::uint64_t> cy_mod;
  cyclo->add_option("m", cy_m)->required()->check(CLI::PositiveNumber);
  cyclo->add_option("--mod", cy_mod, "Reduce coefficients mod prime p");

  auto* units = app.add_subcommand("units", "Cyclotomic unit generators for n = mp");
  std::uint64_t un_m = 0, un_p = 0;
  bool un_reduced = false, un_images = false;
  units->add_option("m", un_m)->required();
  units->add_option("p", un_p)->required();
  units->add_flag("--reduced", un_reduced, "Orbit-reduced generator set");
  units->add_flag("--images", un_images, "Show images in F_p[z]/Phi_m and their orders");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kDomain;
  }

  try {
    if (*primroot) return cmd_primroot(common, pr_m, pr_table, pr_max_m);
    if (*swan_cmd) return cmd_swan(common, sw_m, sw_p, sw_method);
    if (*verify) return cmd_verify(common, vf_max_m, vf_tables);
    if (*factor_cmd) return cmd_factor(common, fc_n);
    if (*cyclo) return cmd_cyclopoly(common, cy_m, cy_mod);
    if (*units) return cmd_units(common, un_m, un_p, un_reduced, un_images);
  } catch (const swan::MethodDisagreementError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDisagreement;
  } catch (const swan::NoPrimitiveRootError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDomain;
  } catch (const swan::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDomain;
  } catch (const swan::FactorBudgetExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBudget;
  } catch (const swan::OrderUnavailableError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBudget;
  }
  return kDomain;
}
