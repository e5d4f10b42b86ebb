b0 = Box(position=(10, 10, 10), size=(20, 20, 20), rotation=0)
m0 = Model(id="M-PANEL", box=b0)
b1 = Box(position=(30, 10, 10), size=(20, 20, 20), rotation=0)
m1 = Model(id="M-PANEL", box=b1)
b2 = Box(position=(50, 10, 10), size=(20, 20, 20), rotation=0)
m2 = Model(id="M-PANEL", box=b2)
b3 = Box(position=(70, 10, 10), size=(20, 20, 20), rotation=0)
m3 = Model(id="M-PANEL", box=b3)
b4 = Box(position=(90, 10, 10), size=(20, 20, 20), rotation=0)
m4 = Model(id="M-PANEL", box=b4)
b5 = Box(position=(110, 10, 10), size=(20, 20, 20), rotation=0)
m5 = Model(id="M-PANEL", box=b5)
b6 = Box(position=(130, 10, 10), size=(20, 20, 20), rotation=0)
m6 = Model(id="M-PANEL", box=b6)
b7 = Box(position=(150, 10, 10), size=(20, 20, 20), rotation=0)
m7 = Model(id="M-PANEL", box=b7)
b8 = Box(position=(170, 10, 10), size=(20, 20, 20), rotation=0)
m8 = Model(id="M-PANEL", box=b8)
b9 = Box(position=(190, 10, 10), size=(20, 20, 20), rotation=0)
m9 = Model(id="M-PANEL", box=b9)
b10 = Box(position=(210, 10, 10), size=(20, 20, 20), rotation=0)
m10 = Model(id="M-PANEL", box=b10)
b11 = Box(position=(230, 10, 10), size=(20, 20, 20), rotation=0)
m11 = Model(id="M-PANEL", box=b11)
b12 = Box(position=(250, 10, 10), size=(20, 20, 20), rotation=0)
m12 = Model(id="M-PANEL", box=b12)
b13 = Box(position=(270, 10, 10), size=(20, 20, 20), rotation=0)
m13 = Model(id="M-PANEL", box=b13)
b14 = Box(position=(290, 10, 10), size=(20, 20, 20), rotation=0)
m14 = Model(id="M-PANEL", box=b14)
b15 = Box(position=(310, 10, 10), size=(20, 20, 20), rotation=0)
m15 = Model(id="M-PANEL", box=b15)
b16 = Box(position=(330, 10, 10), size=(20, 20, 20), rotation=0)
m16 = Model(id="M-PANEL", box=b16)
b17 = Box(position=(350, 10, 10), size=(20, 20, 20), rotation=0)
m17 = Model(id="M-PANEL", box=b17)
b18 = Box(position=(370, 10, 10), size=(20, 20, 20), rotation=0)
m18 = Model(id="M-PANEL", box=b18)
b19 = Box(position=(390, 10, 10), size=(20, 20, 20), rotation=0)
m19 = Model(id="M-PANEL", box=b19)
b20 = Box(position=(410, 10, 10), size=(20, 20, 20), rotation=0)
m20 = Model(id="M-PANEL", box=b20)
b21 = Box(position=(430, 10, 10), size=(20, 20, 20), rotation=0)
m21 = Model(id="M-PANEL", box=b21)
b22 = Box(position=(450, 10, 10), size=(20, 20, 20), rotation=0)
m22 = Model(id="M-PANEL", box=b22)
b23 = Box(position=(470, 10, 10), size=(20, 20, 20), rotation=0)
m23 = Model(id="M-PANEL", box=b23)
b24 = Box(position=(490, 10, 10), size=(20, 20, 20), rotation=0)
m24 = Model(id="M-PANEL", box=b24)
b25 = Box(position=(510, 10, 10), size=(20, 20, 20), rotation=0)
m25 = Model(id="M-PANEL", box=b25)
b26 = Box(position=(530, 10, 10), size=(20, 20, 20), rotation=0)
m26 = Model(id="M-PANEL", box=b26)
b27 = Box(position=(550, 10, 10), size=(20, 20, 20), rotation=0)
m27 = Model(id="M-PANEL", box=b27)
b28 = Box(position=(570, 10, 10), size=(20, 20, 20), rotation=0)
m28 = Model(id="M-PANEL", box=b28)
b29 = Box(position=(590, 10, 10), size=(20, 20, 20), rotation=0)
m29 = Model(id="M-PANEL", box=b29)
b30 = Box(position=(610, 10, 10), size=(20, 20, 20), rotation=0)
m30 = Model(id="M-PANEL", box=b30)
b31 = Box(position=(630, 10, 10), size=(20, 20, 20), rotation=0)
m31 = Model(id="M-PANEL", box=b31)
b32 = Box(position=(650, 10, 10), size=(20, 20, 20), rotation=0)
m32 = Model(id="M-PANEL", box=b32)
b33 = Box(position=(670, 10, 10), size=(20, 20, 20), rotation=0)
m33 = Model(id="M-PANEL", box=b33)
b34 = Box(position=(690, 10, 10), size=(20, 20, 20), rotation=0)
m34 = Model(id="M-PANEL", box=b34)
b35 = Box(position=(710, 10, 10), size=(20, 20, 20), rotation=0)
m35 = Model(id="M-PANEL", box=b35)
b36 = Box(position=(730, 10, 10), size=(20, 20, 20), rotation=0)
m36 = Model(id="M-PANEL", box=b36)
b37 = Box(position=(750, 10, 10), size=(20, 20, 20), rotation=0)
m37 = Model(id="M-PANEL", box=b37)
b38 = Box(position=(770, 10, 10), size=(20, 20, 20), rotation=0)
m38 = Model(id="M-PANEL", box=b38)
b39 = Box(position=(790, 10, 10), size=(20, 20, 20), rotation=0)
m39 = Model(id="M-PANEL", box=b39)
b40 = Box(position=(810, 10, 10), size=(20, 20, 20), rotation=0)
m40 = Model(id="M-PANEL", box=b40)
b41 = Box(position=(830, 10, 10), size=(20, 20, 20), rotation=0)
m41 = Model(id="M-PANEL", box=b41)
b42 = Box(position=(850, 10, 10), size=(20, 20, 20), rotation=0)
m42 = Model(id="M-PANEL", box=b42)
b43 = Box(position=(870, 10, 10), size=(20, 20, 20), rotation=0)
m43 = Model(id="M-PANEL", box=b43)
b44 = Box(position=(890, 10, 10), size=(20, 20, 20), rotation=0)
m44 = Model(id="M-PANEL", box=b44)
b45 = Box(position=(910, 10, 10), size=(20, 20, 20), rotation=0)
m45 = Model(id="M-PANEL", box=b45)
b46 = Box(position=(930, 10, 10), size=(20, 20, 20), rotation=0)
m46 = Model(id="M-PANEL", box=b46)
b47 = Box(position=(950, 10, 10), size=(20, 20, 20), rotation=0)
m47 = Model(id="M-PANEL", box=b47)
b48 = Box(position=(970, 10, 10), size=(20, 20, 20), rotation=0)
m48 = Model(id="M-PANEL", box=b48)
