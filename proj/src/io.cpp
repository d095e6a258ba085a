#include "hwcns/io.hpp"

#include <charconv>
#include <cmath>

namespace hwcns {

std::string format_number(double v) {
  if (v == 0.0) return "0";  // drops the sign of -0
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

void write_csv_1d(std::ostream& os, const Field<1>& f, const GasModel& gas) {
  os << "x,rho,u,p,e\n";
  f.for_each_interior([&](int i, int, const State<1>& q) {
    const PrimitiveState<1> w = conserved_to_primitive<1>(q, gas);
    const double e = w.p / ((gas.gamma - 1.0) * w.rho);
    os << format_number(f.grid.coord(0, i)) << ',' << format_number(w.rho) << ',' << format_number(w.vel[0])
       << ',' << format_number(w.p) << ',' << format_number(e) << '\n';
  });
}

void write_csv_2d(std::ostream& os, const Field<2>& f, const GasModel& gas) {
  os << "x,y,rho,u,v,p\n";
  f.for_each_interior([&](int i, int j, const State<2>& q) {
    const PrimitiveState<2> w = conserved_to_primitive<2>(q, gas);
    os << format_number(f.grid.coord(0, i)) << ',' << format_number(f.grid.coord(1, j)) << ','
       << format_number(w.rho) << ',' << format_number(w.vel[0]) << ',' << format_number(w.vel[1]) << ','
       << format_number(w.p) << '\n';
  });
}

void write_vtk_2d(std::ostream& os, const Field<2>& f, const GasModel& gas) {
  const Grid& g = f.grid;
  os << "# vtk DataFile Version 3.0\n"
     << "hwcns t=" << format_number(f.time) << "\n"
     << "ASCII\nDATASET STRUCTURED_POINTS\n"
     << "DIMENSIONS " << g.n[0] << ' ' << g.n[1] << " 1\n"
     << "ORIGIN " << format_number(g.lo[0]) << ' ' << format_number(g.lo[1]) << " 0\n"
     << "SPACING " << format_number(g.spacing(0)) << ' ' << format_number(g.spacing(1)) << " 1\n"
     << "POINT_DATA " << g.n[0] * g.n[1] << '\n';
  auto scalar = [&](const char* name, auto&& get) {
    os << "SCALARS " << name << " double 1\nLOOKUP_TABLE default\n";
    f.for_each_interior([&](int, int, const State<2>& q) { os << format_number(get(q)) << '\n'; });
  };
  scalar("rho", [&](const State<2>& q) { return q[0]; });
  scalar("p", [&](const State<2>& q) { return pressure<2>(q, gas); });
  os << "VECTORS velocity double\n";
  f.for_each_interior([&](int, int, const State<2>& q) {
    os << format_number(q[1] / q[0]) << ' ' << format_number(q[2] / q[0]) << " 0\n";
  });
}

}  // namespace hwcns
