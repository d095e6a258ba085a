#include "hwcns/harness.hpp"

#include <cstdio>
#include <stdexcept>

#include "hwcns/io.hpp"

namespace hwcns {

void fill_orders(std::vector<OrderRow>& rows) {
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const double ratio = rows[r - 1].h / rows[r].h;
    rows[r].order_l1 = observed_order(rows[r - 1].l1, rows[r].l1, ratio);
    rows[r].order_l2 = observed_order(rows[r - 1].l2, rows[r].l2, ratio);
    rows[r].order_linf = observed_order(rows[r - 1].linf, rows[r].linf, ratio);
  }
}

namespace {

std::string opt(const std::optional<double>& v) { return v ? format_number(*v) : std::string(); }

}  // namespace

void write_order_csv(std::ostream& os, const std::vector<OrderRow>& rows) {
  os << "n,h,l1,l2,linf,order_l1,order_l2,order_linf\n";
  for (const auto& r : rows) {
    os << r.n << ',' << format_number(r.h) << ',' << format_number(r.l1) << ',' << format_number(r.l2)
       << ',' << format_number(r.linf) << ',' << opt(r.order_l1) << ',' << opt(r.order_l2) << ','
       << opt(r.order_linf) << '\n';
  }
}

void write_order_text(std::ostream& os, const std::vector<OrderRow>& rows) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "%8s %12s %12s %12s %12s %8s %8s %8s\n", "n", "h", "L1", "L2", "Linf",
                "p(L1)", "p(L2)", "p(Linf)");
  os << buf;
  for (const auto& r : rows) {
    auto o = [](const std::optional<double>& v) { return v ? *v : 0.0; };
    if (r.order_l1) {
      std::snprintf(buf, sizeof buf, "%8d %12.4e %12.4e %12.4e %12.4e %8.3f %8.3f %8.3f\n", r.n, r.h, r.l1,
                    r.l2, r.linf, o(r.order_l1), o(r.order_l2), o(r.order_linf));
    } else {
      std::snprintf(buf, sizeof buf, "%8d %12.4e %12.4e %12.4e %12.4e %8s %8s %8s\n", r.n, r.h, r.l1, r.l2,
                    r.linf, "-", "-", "-");
    }
    os << buf;
  }
}

std::optional<double> crossing_position(std::span<const double> x, std::span<const double> values,
                                        double level, std::size_t start) {
  if (x.size() != values.size()) throw std::invalid_argument("coordinate/value size mismatch");
  for (std::size_t i = start + 1; i < values.size(); ++i) {
    const double a = values[i - 1] - level;
    const double b = values[i] - level;
    if (a == 0.0) return x[i - 1];
    if ((a < 0.0) != (b < 0.0)) return x[i - 1] + (x[i] - x[i - 1]) * a / (a - b);
  }
  return std::nullopt;
}

}  // namespace hwcns
