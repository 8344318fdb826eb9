// Command-line front end: dimensions, state lists, projection grids,
// multiplicities, projected basis vectors, canonical isoscalar factors,
// O(5) > O(3) Wigner coefficients, table dumps and the validation suite.

#include <atomic>
#include <iostream>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "o5/canonical.hpp"
#include "o5/oracle.hpp"
#include "o5/projection.hpp"
#include "o5/wigner.hpp"

using json = nlohmann::ordered_json;
using namespace o5;

namespace {

struct Options {
  unsigned precision = 60;
  std::string format = "text";  // text | json | csv
  bool no_reconstruct = false;

  PrecisionConfig cfg() const {
    PrecisionConfig c;
    c.decimal_digits = precision;
    c.rank_tolerance = 1e-40;
    if (precision != 60) {
      // keep the tolerance inside the accepted band for other precisions
      std::ostringstream os;
      os << "1e-" << (precision * 2 / 3);
      c.rank_tolerance = std::stod(os.str());
    }
    return c;
  }
};

std::string float_str(const Real& x, unsigned digits) {
  return x.str(digits, std::ios_base::scientific);
}

std::string half_str(int two_m) {
  if (two_m % 2 == 0) return std::to_string(two_m / 2);
  return std::to_string(two_m) + "/2";
}

json value_json(const NumericValue& v, const Options& opt) {
  json j;
  if (v.exact && !opt.no_reconstruct) {
    j["sign"] = v.exact->sign;
    if (v.exact->sign != 0) {
      j["radicand"] = {{"num", boost::multiprecision::numerator(v.exact->radicand).str()},
                       {"den", boost::multiprecision::denominator(v.exact->radicand).str()}};
    } else {
      j["radicand"] = {{"num", "0"}, {"den", "1"}};
    }
  }
  j["float"] = float_str(v.value, opt.precision);
  return j;
}

NumericValue to_numeric(const SqrtReal& s, const PrecisionConfig& cfg) {
  NumericValue v;
  v.value = s.shadow;
  v.exact = s;
  return v;
}

std::string value_text(const NumericValue& v, const Options& opt) {
  std::ostringstream os;
  if (v.exact && !opt.no_reconstruct) {
    const SqrtReal& s = *v.exact;
    if (s.sign == 0)
      os << "0";
    else
      os << (s.sign < 0 ? "-" : "") << "sqrt(" << s.radicand << ")";
    os << " = ";
  }
  os << float_str(v.value, opt.precision);
  return os.str();
}

// one CSV row per coefficient: tau,k,chi,q,t,sign,num,den,float
void csv_coeff_row(std::ostream& os, int tau, int k, int chi, QtPair p,
                   const NumericValue& v, const Options& opt) {
  os << tau << "," << k << "," << chi << "," << p.q << "," << p.t << ",";
  if (v.exact && !opt.no_reconstruct) {
    os << v.exact->sign << ",";
    if (v.exact->sign != 0)
      os << boost::multiprecision::numerator(v.exact->radicand) << ","
         << boost::multiprecision::denominator(v.exact->radicand);
    else
      os << "0,1";
  } else {
    os << ",,";
  }
  os << "," << float_str(v.value, opt.precision) << "\n";
}

void print_basis(const std::vector<KernelVector>& basis, const Options& opt) {
  if (opt.format == "json") {
    json out = json::array();
    for (const KernelVector& kv : basis) {
      json jv;
      jv["tau"] = kv.tau;
      jv["L"] = 2 * kv.tau - kv.k;
      jv["chi"] = kv.index;
      jv["gauge"] = kv.gauge == Gauge::RawZeta ? "raw" : "ortho";
      json coeffs = json::object();
      for (std::size_t i = 0; i < kv.support.size(); ++i) {
        std::string key =
            std::to_string(kv.support[i].q) + "," + std::to_string(kv.support[i].t);
        coeffs[key] = value_json(kv.coeffs[i], opt);
      }
      jv["coefficients"] = coeffs;
      out.push_back(jv);
    }
    std::cout << out.dump(2) << "\n";
  } else if (opt.format == "csv") {
    std::cout << "tau,k,chi,q,t,sign,num,den,float\n";
    for (const KernelVector& kv : basis)
      for (std::size_t i = 0; i < kv.support.size(); ++i)
        csv_coeff_row(std::cout, kv.tau, kv.k, kv.index, kv.support[i],
                      kv.coeffs[i], opt);
  } else {
    for (const KernelVector& kv : basis) {
      std::cout << "tau=" << kv.tau << " L=" << 2 * kv.tau - kv.k
                << " chi=" << kv.index
                << " gauge=" << (kv.gauge == Gauge::RawZeta ? "raw" : "ortho")
                << "\n";
      for (std::size_t i = 0; i < kv.support.size(); ++i)
        std::cout << "  (q=" << kv.support[i].q << ", t=" << kv.support[i].t
                  << ")  " << value_text(kv.coeffs[i], opt) << "\n";
    }
  }
}

void print_value(const NumericValue& v, const Options& opt) {
  if (opt.format == "json")
    std::cout << value_json(v, opt).dump(2) << "\n";
  else
    std::cout << value_text(v, opt) << "\n";
}

// ---- tables ----

void table_grid(int max_k) {
  for (int k = 0; k <= max_k; ++k) {
    std::cout << "k=" << k << ":";
    for (QtPair p : grid(k)) std::cout << " (" << p.q << "," << p.t << ")";
    std::cout << "\n";
  }
}

void table_canonical(const std::vector<int>& taus, const Options& opt) {
  PrecisionConfig cfg = opt.cfg();
  for (int tau : taus) {
    for (const RmJ& st : enumerate_states(tau)) {
      // spinor couplings tau -> tau+1 and tensor couplings r -> r, r+-1
      for (int m2 : {1, -1}) {
        IsfQuery q{tau + 1, st.r, st.mJ2 + m2, true, 0, m2, tau, st.r, st.mJ2};
        SqrtReal v = isf_canonical(q, cfg);
        if (v.is_zero()) continue;
        std::cout << "tau=" << tau << " r=" << st.r << " mJ=" << half_str(st.mJ2)
                  << " spinor m=" << half_str(m2) << " -> tau'=" << tau + 1
                  << " : " << value_text(to_numeric(v, cfg), opt) << "\n";
      }
      for (int dr : {1, 0, -1}) {
        IsfQuery q{tau + 1, st.r + dr, st.mJ2, false, 0, 0, tau, st.r, st.mJ2};
        SqrtReal v = isf_canonical(q, cfg);
        if (v.is_zero()) continue;
        std::cout << "tau=" << tau << " r=" << st.r << " mJ=" << half_str(st.mJ2)
                  << " tensor dr=" << dr << " -> tau'=" << tau + 1 << " : "
                  << value_text(to_numeric(v, cfg), opt) << "\n";
      }
    }
  }
}

void table_wigner3(const std::vector<int>& taus, const Options& opt) {
  PrecisionConfig cfg = opt.cfg();
  for (int tau : taus)
    for (int kp : {0, 2, 3, 4, 5})
      for (int mu = -2; mu <= 2; ++mu) {
        int k1 = kp - 2 + mu;
        if (k1 < 0 || k1 > 2 * tau || multiplicity(tau, k1) == 0) continue;
        if (multiplicity(tau + 1, kp) == 0) continue;
        NumericValue v = wigner_o3({tau, 1, k1, mu, 1, kp}, cfg);
        std::cout << "tau=" << tau << " L1=" << 2 * tau - k1
                  << " L=" << 2 * tau + 2 - kp << " : " << value_text(v, opt)
                  << "\n";
      }
}

void table_wigner4(const std::vector<int>& taus, const Options& opt) {
  PrecisionConfig cfg = opt.cfg();
  for (int tau : taus) {
    const int kp = 6;
    if (multiplicity(tau + 1, kp) < 2) continue;
    for (int chi = 1; chi <= 2; ++chi)
      for (int mu = -2; mu <= 2; ++mu) {
        int k1 = kp - 2 + mu;
        if (k1 < 0 || k1 > 2 * tau) continue;
        int m1 = multiplicity(tau, k1);
        for (int chi1 = 1; chi1 <= m1; ++chi1) {
          NumericValue v = wigner_o3({tau, chi1, k1, mu, chi, kp}, cfg);
          std::cout << "tau=" << tau << " chi1=" << chi1
                    << " L1=" << 2 * tau - k1 << " chi=" << chi
                    << " L=" << 2 * tau + 2 - kp << " : " << value_text(v, opt)
                    << "\n";
        }
      }
  }
}

// ---- validate ----

int run_validate(int max_tau, int max_k, int jobs, const Options& opt) {
  PrecisionConfig cfg = opt.cfg();
  std::atomic<bool> failed{false};
  std::mutex out_mutex;

  // integer identities first (cheap, single-threaded)
  for (int tau = 0; tau <= max_tau; ++tau) {
    long sum = 0;
    for (const RmJ& st : enumerate_states(tau)) sum += 2 * st.r + 1;
    if (sum != o5_dim(tau)) {
      std::cerr << "dimension identity failed at tau=" << tau << "\n";
      return 3;
    }
    long total = 0;
    for (int k = 0; k <= 2 * tau; ++k) total += multiplicity(tau, k);
    long states = 0;
    for (int k = 0; k <= 2 * tau; ++k)
      for (QtPair p : grid(k))
        if (state_valid(tau, k, p)) ++states;
    (void)total;
    (void)states;
  }

  struct Task {
    int tau, k;
  };
  std::vector<Task> tasks;
  for (int tau = 0; tau <= max_tau; ++tau)
    for (int k = 0; k <= std::min(max_k, 2 * tau); ++k)
      if (multiplicity(tau, k) > 0) tasks.push_back({tau, k});

  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      const Task& t = tasks[i];
      try {
        // projection invariants: orthonormality comes out of kernel_basis
        // construction checks; Wigner columns must be orthonormal
        std::vector<KernelVector> b = orthonormal_basis(t.tau, t.k, cfg);
        if (static_cast<int>(b.size()) != multiplicity(t.tau, t.k))
          throw ConsistencyError("kernel dimension mismatch");
        if (t.tau >= 1)
          for (int chi = 1; chi <= multiplicity(t.tau, t.k); ++chi) {
            Real r = check_orthonormality(t.tau - 1, chi, t.k, cfg);
            if (r > pow10(-static_cast<long>(cfg.decimal_digits / 2)))
              throw ConsistencyError("Wigner orthonormality residual too large");
          }
        if (t.tau <= 6) {
          CrosscheckReport rep = crosscheck(t.tau, t.k, cfg);
          std::lock_guard<std::mutex> lock(out_mutex);
          std::cout << "tau=" << t.tau << " k=" << t.k
                    << " ok (oracle dist=" << float_str(rep.subspace_distance, 3)
                    << ")\n";
        } else {
          std::lock_guard<std::mutex> lock(out_mutex);
          std::cout << "tau=" << t.tau << " k=" << t.k << " ok\n";
        }
      } catch (const std::exception& e) {
        std::lock_guard<std::mutex> lock(out_mutex);
        std::cerr << "tau=" << t.tau << " k=" << t.k << " FAILED: " << e.what()
                  << "\n";
        failed = true;
      }
    }
  };
  std::vector<std::thread> pool;
  for (int i = 0; i < std::max(1, jobs); ++i) pool.emplace_back(worker);
  for (std::thread& th : pool) th.join();
  return failed ? 3 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"symmetric-irrep O(5) > O(3) basis and Wigner coefficient tool"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--precision", opt.precision, "working decimal digits")
      ->capture_default_str();
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  app.add_flag("--no-reconstruct", opt.no_reconstruct,
               "skip exact radicand reconstruction");

  int tau = 0, k = 0, L = 0, L1 = 0, chi = 1, chi1 = 1;
  std::string gauge = "ortho";

  CLI::App* c_dim = app.add_subcommand("dim", "irrep dimension");
  c_dim->add_option("--tau", tau)->required();

  CLI::App* c_states = app.add_subcommand("states", "canonical (r, mJ) states");
  c_states->add_option("--tau", tau)->required();

  CLI::App* c_grid = app.add_subcommand("grid", "(q, t) pairs of a level");
  c_grid->add_option("--k", k)->required();

  CLI::App* c_mult = app.add_subcommand("multiplicity", "Multi(tau, k)");
  c_mult->add_option("--tau", tau)->required();
  c_mult->add_option("--k", k)->required();

  CLI::App* c_basis = app.add_subcommand("basis", "projected basis vectors");
  c_basis->add_option("--tau", tau)->required();
  c_basis->add_option("--L", L)->required();
  c_basis->add_option("--gauge", gauge)->check(CLI::IsMember({"raw", "ortho"}));

  IsfQuery isf{};
  CLI::App* c_isf = app.add_subcommand("isf-canonical", "canonical isoscalar factor");
  c_isf->add_option("--tau-in", isf.tau_in)->required();
  c_isf->add_option("--r-in", isf.r_in)->required();
  c_isf->add_option("--two-mj-in", isf.mJ2_in)->required();
  c_isf->add_option("--tau-out", isf.tau_out)->required();
  c_isf->add_option("--r-out", isf.r_out)->required();
  c_isf->add_option("--two-mj-out", isf.mJ2_out)->required();
  c_isf->add_flag("--spinor", isf.spinor, "spinor (r=0) operator piece");
  c_isf->add_option("--mu", isf.mu, "tensor magnetic label");
  c_isf->add_option("--two-m", isf.m2, "spinor magnetic label, doubled");

  CLI::App* c_wig = app.add_subcommand("wigner", "elementary Wigner coefficient");
  c_wig->add_option("--tau", tau)->required();
  c_wig->add_option("--L1", L1)->required();
  c_wig->add_option("--L", L)->required();
  c_wig->add_option("--chi1", chi1)->capture_default_str();
  c_wig->add_option("--chi", chi)->capture_default_str();

  int which = 2, max_k = 10;
  std::vector<int> tau_list{6};
  CLI::App* c_tab = app.add_subcommand("tables", "regenerate reference tables");
  c_tab->add_option("--which", which)->required()->check(CLI::Range(1, 4));
  c_tab->add_option("--tau-list", tau_list, "seniorities for tables 1/3/4");
  c_tab->add_option("--max-k", max_k, "level bound for table 2");

  int max_tau = 6, vmax_k = 12, jobs = 1;
  CLI::App* c_val = app.add_subcommand("validate", "run the validation suite");
  c_val->add_option("--max-tau", max_tau)->capture_default_str();
  c_val->add_option("--max-k", vmax_k)->capture_default_str();
  c_val->add_option("--jobs", jobs)->capture_default_str();

  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    PrecisionConfig cfg = opt.cfg();
    cfg.validate();
    PrecisionGuard guard(cfg);

    if (*c_dim) {
      std::cout << o5_dim(tau) << "\n";
    } else if (*c_states) {
      for (const RmJ& st : enumerate_states(tau))
        std::cout << "r=" << st.r << " mJ=" << half_str(st.mJ2) << "\n";
    } else if (*c_grid) {
      for (QtPair p : grid(k))
        std::cout << "(" << p.q << "," << p.t << ")\n";
    } else if (*c_mult) {
      std::cout << multiplicity(tau, k) << "\n";
    } else if (*c_basis) {
      int kk = 2 * tau - L;
      if (kk < 0 || kk > 2 * tau)
        throw DomainError("L outside the range of (tau 0)");
      std::vector<KernelVector> b = gauge == "raw" ? kernel_basis(tau, kk, cfg)
                                                   : orthonormal_basis(tau, kk, cfg);
      print_basis(b, opt);
    } else if (*c_isf) {
      print_value(to_numeric(isf_canonical(isf, cfg), cfg), opt);
    } else if (*c_wig) {
      int k1 = 2 * tau - L1, kp = 2 * tau + 2 - L;
      int mu = L - L1;
      if (mu < -2 || mu > 2)
        throw DomainError("wigner: |L - L1| must be at most 2");
      print_value(wigner_o3({tau, chi1, k1, mu, chi, kp}, cfg), opt);
    } else if (*c_tab) {
      switch (which) {
        case 1: table_canonical(tau_list, opt); break;
        case 2: table_grid(max_k); break;
        case 3: table_wigner3(tau_list, opt); break;
        default: table_wigner4(tau_list, opt); break;
      }
    } else if (*c_val) {
      return run_validate(max_tau, vmax_k, jobs, opt);
    }
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ConsistencyError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const PrecisionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
