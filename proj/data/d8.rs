# dihedral group of order 8 on two involutions, with a geodesic complete
# rewriting system; (a d)^4 is the relator of the third rule
name d8;
gens a!, d!;
rel (a d)^4;
rule a a -> ;
rule d d -> ;
rule d a d a -> a d a d;
