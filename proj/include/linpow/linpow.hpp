#ifndef LINPOW_LINPOW_HPP
#define LINPOW_LINPOW_HPP

#include "betti.hpp"
#include "corpus.hpp"
#include "families.hpp"
#include "field.hpp"
#include "graph.hpp"
#include "linalg.hpp"
#include "linear_quotients.hpp"
#include "monomial.hpp"
#include "parallel.hpp"
#include "rees.hpp"
#include "report.hpp"
#include "simplicial.hpp"

#endif  // LINPOW_LINPOW_HPP
