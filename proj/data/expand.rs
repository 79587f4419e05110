# a rule that never terminates
name expand;
gens a;
rule a -> a a;
