// Solution output: CSV with a one-line header and legacy VTK structured
// points. Numbers use the shortest decimal form that round-trips.
#pragma once

#include <ostream>
#include <string>

#include "hwcns/euler.hpp"
#include "hwcns/grid.hpp"

namespace hwcns {

std::string format_number(double v);

/// x, rho, u, p, e (e = specific internal energy).
void write_csv_1d(std::ostream& os, const Field<1>& f, const GasModel& gas);
/// x, y, rho, u, v, p, row-major with x fastest.
void write_csv_2d(std::ostream& os, const Field<2>& f, const GasModel& gas);
void write_vtk_2d(std::ostream& os, const Field<2>& f, const GasModel& gas);

}  // namespace hwcns
