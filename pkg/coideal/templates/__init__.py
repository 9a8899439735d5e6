'''
Templates of human-readable output
@author: coideal developers
'''
