# Family predicates and ladder constructions
