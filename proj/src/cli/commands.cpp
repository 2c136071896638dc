#include "slabgreen/cli/commands.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <sstream>
#include <thread>

#include "slabgreen/emission.hpp"
#include "slabgreen/identity.hpp"
#include "slabgreen/slab_green.hpp"
#include "slabgreen/vacuum3d.hpp"

namespace slabgreen::cli {
namespace {

using Row = std::vector<Cell>;

struct Block {
  std::vector<Row> rows;
  bool failed = false;
};

using Task = std::function<Block()>;

// Runs tasks concurrently; blocks come back in task order.
std::vector<Block> run_parallel(const std::vector<Task>& tasks) {
  std::vector<Block> out(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) out[i] = tasks[i]();
  };
  const std::size_t n_threads =
      std::min<std::size_t>(tasks.size(), std::max(1u, std::thread::hardware_concurrency()));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < n_threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  return out;
}

CommandResult collect(std::vector<std::string> header, const std::vector<Task>& tasks) {
  CommandResult result;
  result.table.header = std::move(header);
  for (auto& block : run_parallel(tasks)) {
    result.numerical_failure |= block.failed;
    for (auto& row : block.rows) result.table.rows.push_back(std::move(row));
  }
  return result;
}

// A row of `width` cells whose leading cells are `keys`, the rest empty,
// and whose last cell carries the error.
Row error_row(std::size_t width, Row keys, const std::string& message) {
  keys.resize(width - 1);
  keys.emplace_back("error: " + message);
  return keys;
}

void append(Row& row, Complex z) {
  row.emplace_back(z.real());
  row.emplace_back(z.imag());
}

const std::vector<double>& single(const Axis& axis, const std::string& name,
                                  const std::string& command) {
  if (axis.values.size() != 1) {
    throw ConfigError(name, "must be a single value for " + command);
  }
  return axis.values;
}

const Axis& require_source(const RunConfig& cfg) {
  if (!cfg.source) throw ConfigError("source", "required");
  return *cfg.source;
}

// Absolute quadrature tolerance. In SI units the user tolerance is taken
// relative to 1/k, the scale of the 1D Green function.
double absolute_tol(const RunConfig& cfg, const CommandOptions& opt, double k) {
  return cfg.units == UnitSystem::si ? opt.tol / k : opt.tol;
}

std::string count_summary(const std::string& name, const CommandResult& r) {
  std::ostringstream s;
  s << name << ": " << r.table.rows.size() << " rows"
    << (r.numerical_failure ? ", some rows FAILED (see status column)" : ", all ok");
  return s.str();
}

}  // namespace

CommandResult cmd_coefficients(const RunConfig& cfg, const CommandOptions&) {
  std::vector<std::string> header = {
      "half_length", "omega", "k",    "eps_re", "eps_im", "n_re",   "n_im",   "A_re",
      "A_im",        "B_re",  "B_im", "C_re",   "C_im",   "D_re",   "D_im",   "Y_re",
      "Y_im",        "abs_A2", "abs_D2", "absorbed", "status"};
  const std::size_t width = header.size();
  std::vector<Task> tasks;
  for (double l : cfg.half_length.values) {
    for (double w : cfg.omega.values) {
      tasks.emplace_back([&cfg, l, w, width]() -> Block {
        try {
          const WaveContext ctx(SlabGeometry(l), cfg.dielectric, w, cfg.constants.c);
          const auto& c = ctx.coefficients();
          Row row{l, w, ctx.k()};
          append(row, ctx.epsilon());
          append(row, ctx.n());
          for (Complex z : {c.A, c.B, c.C, c.D, c.Y}) append(row, z);
          row.emplace_back(std::norm(c.A));
          row.emplace_back(std::norm(c.D));
          row.emplace_back(1.0 - c.power_sum());
          row.emplace_back(std::string("ok"));
          return {{std::move(row)}, false};
        } catch (const Error& e) {
          return {{error_row(width, {l, w}, e.what())}, true};
        }
      });
    }
  }
  auto r = collect(std::move(header), tasks);
  r.summary = count_summary("coefficients", r);
  return r;
}

CommandResult cmd_verify_identity(const RunConfig& cfg, const CommandOptions& opt) {
  std::vector<std::pair<double, double>> pairs = cfg.identity_pairs;
  if (pairs.empty()) {
    const auto& xs = require_source(cfg).values;
    for (double a : xs) {
      for (double b : xs) pairs.emplace_back(a, b);
    }
  }
  std::vector<std::string> header = {
      "half_length", "omega",  "x_a",     "x_b",
      "lhs_re",      "lhs_im", "im_g",    "f_re",
      "f_im",        "residual_corrected_re", "residual_corrected_im",
      "residual_uncorrected_re", "residual_uncorrected_im",
      "abs_residual_corrected",  "bound",  "quadrature_error", "status"};
  const std::size_t width = header.size();
  std::vector<Task> tasks;
  for (double l : cfg.half_length.values) {
    for (double w : cfg.omega.values) {
      for (const auto& [xa, xb] : pairs) {
        tasks.emplace_back([&cfg, &opt, l, w, xa = xa, xb = xb, width]() -> Block {
          try {
            const WaveContext ctx(SlabGeometry(l), cfg.dielectric, w, cfg.constants.c);
            const double tol = absolute_tol(cfg, opt, ctx.k());
            const auto rep = identity_report(xa, xb, ctx, tol);
            const double bound = identity_bound(rep, tol);
            const double res = std::abs(rep.residual_corrected);
            Row row{l, w, xa, xb};
            append(row, rep.lhs);
            row.emplace_back(rep.im_g);
            append(row, rep.f);
            append(row, rep.residual_corrected);
            append(row, rep.residual_uncorrected);
            row.emplace_back(res);
            row.emplace_back(bound);
            row.emplace_back(rep.quadrature_estimate_error);
            const bool ok = res <= bound;
            row.emplace_back(std::string(ok ? "ok" : "tolerance_exceeded"));
            return {{std::move(row)}, !ok};
          } catch (const Error& e) {
            return {{error_row(width, {l, w, xa, xb}, e.what())}, true};
          }
        });
      }
    }
  }
  auto r = collect(std::move(header), tasks);
  double worst = 0.0;
  for (const auto& row : r.table.rows) {
    if (const auto* v = std::get_if<double>(&row[13])) worst = std::max(worst, *v);
  }
  std::ostringstream s;
  s << count_summary("verify-identity", r) << "; max |residual_corrected| = " << worst;
  r.summary = s.str();
  return r;
}

CommandResult cmd_decay_scan(const RunConfig& cfg, const CommandOptions& opt) {
  const Axis& source = require_source(cfg);
  std::vector<double> ls = cfg.half_length.values;
  std::vector<double> ws = cfg.omega.values;
  std::vector<double> xs = source.values;
  switch (opt.sweep) {
    case SweepKind::position:
      single(cfg.half_length, "slab.half_length", "a position sweep");
      single(cfg.omega, "omega", "a position sweep");
      break;
    case SweepKind::thickness:
      single(cfg.omega, "omega", "a thickness sweep");
      single(source, "source", "a thickness sweep");
      break;
    case SweepKind::frequency:
      single(cfg.half_length, "slab.half_length", "a frequency sweep");
      single(source, "source", "a frequency sweep");
      break;
  }

  std::vector<std::string> header = {"half_length", "omega", "x_s", "gamma", "gamma_g",
                                     "gamma_vac_1d", "normalized", "normalized_g"};
  if (opt.oracle) {
    for (const char* h : {"gamma_quadrature", "normalized_quadrature", "quadrature_rel_diff"}) {
      header.emplace_back(h);
    }
  }
  header.emplace_back("status");
  const std::size_t width = header.size();

  std::vector<Task> tasks;
  for (double l : ls) {
    for (double w : ws) {
      for (double x : xs) {
        tasks.emplace_back([&cfg, &opt, l, w, x, width]() -> Block {
          try {
            const WaveContext ctx(SlabGeometry(l), cfg.dielectric, w, cfg.constants.c);
            const auto params = cfg.emission(w);
            std::optional<double> tol;
            if (opt.oracle) tol = absolute_tol(cfg, opt, ctx.k());
            const auto rep = decay_report(params, ctx, x, tol);
            Row row{l, w, x, rep.gamma_corrected, rep.gamma_uncorrected, rep.gamma_vac_1d,
                    rep.normalized_corrected, rep.normalized_uncorrected};
            bool ok = true;
            if (opt.oracle) {
              const double gq = *rep.gamma_quadrature;
              const double diff = std::abs(gq - rep.gamma_corrected);
              const double scale = 2.0 * params.omega0 * params.omega0 * params.dipole *
                                   params.dipole /
                                   (params.hbar * params.epsilon0 * params.c * params.c *
                                    params.surface);
              ok = diff <= std::max(scale * *tol, 1e-7 * std::abs(rep.gamma_corrected));
              row.emplace_back(gq);
              row.emplace_back(gq / rep.gamma_vac_1d);
              row.emplace_back(rep.gamma_corrected != 0.0 ? diff / std::abs(rep.gamma_corrected)
                                                          : diff);
            }
            row.emplace_back(std::string(ok ? "ok" : "oracle_mismatch"));
            return {{std::move(row)}, !ok};
          } catch (const Error& e) {
            return {{error_row(width, {l, w, x}, e.what())}, true};
          }
        });
      }
    }
  }
  auto r = collect(std::move(header), tasks);
  r.summary = count_summary("decay-scan", r);
  return r;
}

CommandResult cmd_limit_study(const RunConfig& cfg, const CommandOptions&) {
  const double l = single(cfg.half_length, "slab.half_length", "limit-study").front();
  const double w = single(cfg.omega, "omega", "limit-study").front();
  const double x = single(require_source(cfg), "source", "limit-study").front();
  if (cfg.limit_path.empty()) throw ConfigError("limit_study", "path or delta required");

  CommandResult r;
  r.table.header = {"eps_re", "eps_im", "gamma", "gamma_g", "f_plus_im_g0", "abs_A2", "abs_D2",
                    "status"};
  for (const auto& row : limit_study(cfg.emission(w), SlabGeometry(l), cfg.limit_path, x)) {
    Row out{row.epsilon.real(), row.epsilon.imag()};
    if (row.failure) {
      r.numerical_failure = true;
      r.table.rows.push_back(error_row(r.table.header.size(), std::move(out), *row.failure));
      continue;
    }
    for (double v : {row.gamma, row.gamma_g, row.f_plus_im_g0, row.a_squared, row.d_squared}) {
      out.emplace_back(v);
    }
    out.emplace_back(std::string("ok"));
    r.table.rows.push_back(std::move(out));
  }
  r.summary = count_summary("limit-study", r);
  return r;
}

CommandResult cmd_tensor3d(const RunConfig& cfg, const CommandOptions&) {
  std::vector<std::string> header = {"quantity", "omega", "rx", "ry", "rz", "i", "j",
                                     "re",       "im",    "status"};
  const std::size_t width = header.size();
  std::vector<Task> tasks;
  for (double w : cfg.omega.values) {
    tasks.emplace_back([&cfg, w, width]() -> Block {
      Block b;
      const std::string ok = "ok";
      try {
        for (const Vec3& r : cfg.separations) {
          const auto g = green_tensor_vacuum(w, r, Vec3::Zero(), cfg.constants.c);
          for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) {
              const auto z = g.components(i, j);
              b.rows.push_back({std::string("G0"), w, r.x(), r.y(), r.z(), (long long)i,
                                (long long)j, z.real(), z.imag(), ok});
            }
          }
        }
        const auto im0 = im_green_coincident(w, cfg.constants.c);
        for (int i = 0; i < 3; ++i) {
          for (int j = 0; j < 3; ++j) {
            b.rows.push_back({std::string("im_G0_coincident"), w, {}, {}, {}, (long long)i,
                              (long long)j, {}, im0(i, j), ok});
          }
        }
        const auto params = cfg.emission(w);
        const double closed = vacuum_decay_3d(params);
        const double route = vacuum_decay_3d_from_green(params, cfg.dipole_direction);
        const bool agree = std::abs(closed - route) <= 1e-12 * std::abs(closed);
        b.rows.push_back({std::string("gamma0_closed_form"), w, {}, {}, {}, {}, {}, closed, {},
                          ok});
        b.rows.push_back({std::string("gamma0_green_route"), w, {}, {}, {}, {}, {}, route, {},
                          std::string(agree ? "ok" : "routes_disagree")});
        b.failed = !agree;
      } catch (const Error& e) {
        b.rows.push_back(error_row(width, {std::string("error"), w}, e.what()));
        b.failed = true;
      }
      return b;
    });
  }
  auto r = collect(std::move(header), tasks);
  r.summary = count_summary("tensor3d", r);
  return r;
}

}  // namespace slabgreen::cli
