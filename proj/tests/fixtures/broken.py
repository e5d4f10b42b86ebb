b0 = Box(position=(300, 200, 1000), size=(600, 400), rotation=0)
m0 = Model(id="M-DOOR", box=b0)
m1 = Model(id="M-DOOR", box=b9)
