// Umbrella header.

#ifndef LKG_LKG_HPP
#define LKG_LKG_HPP

#include "lkg/calculus.hpp"
#include "lkg/diff.hpp"
#include "lkg/formula.hpp"
#include "lkg/literalization.hpp"
#include "lkg/oracle.hpp"
#include "lkg/parser.hpp"
#include "lkg/proof.hpp"
#include "lkg/proof_io.hpp"
#include "lkg/pv.hpp"
#include "lkg/render.hpp"

#endif  // LKG_LKG_HPP
