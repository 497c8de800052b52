"""netdisrupt - covert network disruption simulator"""
