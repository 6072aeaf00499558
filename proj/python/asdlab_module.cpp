#include <pybind11/pybind11.h>
PYBIND11_MODULE(_asdlab, m) { m.doc() = "placeholder"; }
