#pragma once

#include "drat/checker.hpp"
#include "drat/clause.hpp"
#include "drat/dimacs.hpp"
#include "drat/error.hpp"
#include "drat/formula.hpp"
#include "drat/literal.hpp"
#include "drat/proof.hpp"
#include "drat/proof_io.hpp"
#include "drat/propagator.hpp"
#include "drat/report.hpp"
