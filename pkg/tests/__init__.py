# cyclodiff test package
