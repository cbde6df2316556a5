#pragma once

#include "translatif/binding.hpp"
#include "translatif/enonce.hpp"
#include "translatif/errors.hpp"
#include "translatif/generate.hpp"
#include "translatif/hfset.hpp"
#include "translatif/propositional.hpp"
#include "translatif/schedule.hpp"
#include "translatif/stack.hpp"
#include "translatif/syntax.hpp"
#include "translatif/theory.hpp"
#include "translatif/translation.hpp"
#include "translatif/verdict.hpp"
