#pragma once

#include <maltsev/census.hh>
#include <maltsev/csp.hh>
#include <maltsev/decide.hh>
#include <maltsev/digraph.hh>
#include <maltsev/errors.hh>
#include <maltsev/io.hh>
#include <maltsev/oracle.hh>
#include <maltsev/structure.hh>
#include <maltsev/synth.hh>
#include <maltsev/ternary_op.hh>
