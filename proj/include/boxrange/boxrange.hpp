#pragma once

#include "boxrange/binomial.hpp"
#include "boxrange/error.hpp"
#include "boxrange/frame.hpp"
#include "boxrange/io.hpp"
#include "boxrange/lattice.hpp"
#include "boxrange/modal.hpp"
#include "boxrange/report.hpp"
#include "boxrange/valuation.hpp"
